#include "fairrank/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fairrank/error.hpp"
#include "fairrank/rng.hpp"

namespace fairrank {

const char* quality_dist_name(QualityDist dist) {
  switch (dist) {
    case QualityDist::uniform_real: return "uniform_real";
    case QualityDist::small_int: return "small_int";
  }
  return "?";
}

bool parse_quality_dist(const std::string& name, QualityDist* out) {
  if (name == "uniform_real") *out = QualityDist::uniform_real;
  else if (name == "small_int") *out = QualityDist::small_int;
  else return false;
  return true;
}

// Draw order is part of the file format: seed memberships, extra memberships
// (one degree draw plus one partial shuffle per item), qualities, then bounds
// (per property: coin, prefix start, value). Reordering any of it would change
// every golden file downstream.
Instance gen_random(const GenParams& params) {
  std::vector<std::string> errors;
  if (params.m < 1) errors.push_back("m must be >= 1");
  if (params.n < 1 || params.n > params.m) errors.push_back("n must be in [1, m]");
  if (params.p < 0 || params.p > params.m) errors.push_back("p must be in [0, m]");
  if (params.p >= 1 && (params.delta < 1 || params.delta > params.p))
    errors.push_back("delta must be in [1, p] when p >= 1");
  if (params.p == 0 && params.delta != 0) errors.push_back("delta must be 0 when p = 0");
  if (!(params.theta > 0.0) || params.theta > 1.0) errors.push_back("theta must be in (0, 1]");
  if (params.lower_rate < 0.0 || params.lower_rate > 1.0)
    errors.push_back("lower_rate must be in [0, 1]");
  if (params.metric == MetricKind::explicit_matrix)
    errors.push_back("gen produces metric-backed weights; pick a metric kind");
  if (!errors.empty()) throw ValidationError(errors);

  Rng rng(params.seed);
  const int m = params.m, n = params.n, p = params.p;

  // Property ell is seeded with item ell so no property comes out empty.
  std::vector<std::vector<int>> properties(p);
  for (int ell = 0; ell < p; ++ell) properties[ell].push_back(ell);
  if (p >= 1) {
    std::vector<int> pool(p);
    for (int item = 0; item < m; ++item) {
      const int base = item < p ? 1 : 0;
      const int extra = rng.uniform_int(0, params.delta - base);
      for (int ell = 0; ell < p; ++ell) pool[ell] = ell;
      if (base) std::swap(pool[item], pool[p - 1]);  // seed property is already held
      const int avail = p - base;
      for (int t = 0; t < extra; ++t) {
        int pick = rng.uniform_int(t, avail - 1);
        std::swap(pool[t], pool[pick]);
        properties[pool[t]].push_back(item);
      }
    }
    for (auto& lst : properties) std::sort(lst.begin(), lst.end());
  }

  std::vector<double> qualities(m);
  for (int i = 0; i < m; ++i) {
    qualities[i] = params.quality_dist == QualityDist::uniform_real
                       ? rng.uniform_real(1.0, 10.0)
                       : static_cast<double>(rng.uniform_int(1, 5));
  }
  std::sort(qualities.begin(), qualities.end(), std::greater<>());

  MetricSpec spec;
  spec.kind = params.metric;
  spec.qualities = std::move(qualities);
  if (params.metric == MetricKind::rank1) {
    spec.discount.resize(n);
    for (int j = 0; j < n; ++j) spec.discount[j] = 1.0 / (1.0 + j);
  }

  InstanceSpec out;
  out.m = m;
  out.n = n;
  out.properties = std::move(properties);
  out.weights = WeightSource::from_metric(spec);

  if (params.theta < 1.0) {
    for (int ell = 0; ell < p; ++ell) {
      const double share = static_cast<double>(out.properties[ell].size()) / m;
      for (int k = 1; k <= n; ++k) {
        int u = static_cast<int>(std::ceil(params.theta * k * share));
        if (u < k) out.upper.push_back({k, ell, u});
      }
    }
  }
  auto upper_at = [&](int k, int ell) {
    for (const auto& b : out.upper)
      if (b.k == k && b.ell == ell) return b.value;
    return k;
  };
  if (params.lower_rate > 0.0) {
    for (int ell = 0; ell < p; ++ell) {
      if (!rng.coin(params.lower_rate)) continue;
      const int k0 = rng.uniform_int(1, n);
      const int cap = std::min(upper_at(k0, ell), static_cast<int>(out.properties[ell].size()));
      if (cap < 1) continue;
      const int v = rng.uniform_int(1, cap);
      for (int k = k0; k <= n; ++k) out.lower.push_back({k, ell, v});
    }
  }

  return validate_instance(out);
}

Instance gen_from_hypergraph(int num_vertices, const std::vector<std::vector<int>>& edges,
                             int n) {
  std::vector<std::string> errors;
  if (num_vertices < 0) errors.push_back("num_vertices must be >= 0");
  const int m = static_cast<int>(edges.size());
  for (int e = 0; e < m; ++e)
    for (int v : edges[e])
      if (v < 0 || v >= num_vertices)
        errors.push_back("edge " + std::to_string(e + 1) + " names vertex " +
                         std::to_string(v + 1) + ", out of range");
  if (!errors.empty()) throw ValidationError(errors);

  std::vector<std::vector<int>> incidence(num_vertices);
  for (int e = 0; e < m; ++e) {
    for (int v : edges[e]) incidence[v].push_back(e);
  }
  InstanceSpec spec;
  spec.m = m;
  spec.n = n;
  for (auto& lst : incidence) {
    if (lst.empty()) continue;  // untouched vertex, constrains nothing
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    spec.properties.push_back(std::move(lst));
  }
  const int p = static_cast<int>(spec.properties.size());
  for (int ell = 0; ell < p; ++ell)
    for (int k = 2; k <= n; ++k) spec.upper.push_back({k, ell, 1});
  spec.weights = WeightSource::from_matrix(Matrix(m, n, 1.0));
  return validate_instance(spec);
}

Instance gen_capped_pair() {
  Matrix w(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w(i, j) = static_cast<double>((4 - i) * (4 - j));
  InstanceSpec spec;
  spec.m = 4;
  spec.n = 4;
  spec.properties = {{0, 1}};
  spec.upper = {{2, 0, 1}};
  spec.weights = WeightSource::from_matrix(w);
  return validate_instance(spec);
}

}  // namespace fairrank
