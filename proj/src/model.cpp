#include "fairrank/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace fairrank {

WeightSource WeightSource::from_matrix(Matrix w) {
  WeightSource src;
  src.spec_ = MetricSpec{MetricKind::explicit_matrix, {}, {}};
  src.matrix_ = std::move(w);
  return src;
}

WeightSource WeightSource::from_metric(MetricSpec spec) {
  WeightSource src;
  src.spec_ = std::move(spec);
  return src;
}

std::optional<Instance> try_validate_instance(const InstanceSpec& spec,
                                              std::vector<std::string>* errors) {
  std::vector<std::string> errs;
  auto fail = [&errs](const std::string& msg) { errs.push_back(msg); };

  const int m = spec.m, n = spec.n;
  const int p = static_cast<int>(spec.properties.size());
  if (m < 1) fail("m must be at least 1");
  if (n < 1) fail("n must be at least 1");
  if (m >= 1 && n > m)
    fail("n=" + std::to_string(n) + " exceeds m=" + std::to_string(m));
  if (!errs.empty()) {
    if (errors) *errors = errs;
    return std::nullopt;
  }

  // Properties: sets of items, stored sorted. Repeats collapse; empty sets and
  // out-of-range members are errors.
  std::vector<std::vector<int>> properties = spec.properties;
  for (int ell = 0; ell < p; ++ell) {
    auto& prop = properties[ell];
    std::sort(prop.begin(), prop.end());
    prop.erase(std::unique(prop.begin(), prop.end()), prop.end());
    if (prop.empty()) {
      fail("property " + std::to_string(ell + 1) + " is empty");
      continue;
    }
    if (prop.front() < 0 || prop.back() >= m) {
      int bad = prop.front() < 0 ? prop.front() : prop.back();
      std::ostringstream os;
      os << "property " << ell + 1 << " contains item " << bad + 1 << " outside [1, " << m << "]";
      fail(os.str());
    }
  }

  // Dense bounds with defaults L=0, U=k, then user entries on top.
  std::vector<int> lower(static_cast<std::size_t>(n) * std::max(p, 1), 0);
  std::vector<int> upper(static_cast<std::size_t>(n) * std::max(p, 1), 0);
  for (int k = 1; k <= n; ++k)
    for (int ell = 0; ell < p; ++ell) upper[static_cast<std::size_t>(k - 1) * p + ell] = k;

  auto apply = [&](const std::vector<InstanceSpec::Bound>& entries, std::vector<int>& dense,
                   const char* which) {
    std::set<std::pair<int, int>> seen;
    for (const auto& b : entries) {
      std::ostringstream at;
      at << which << " bound at (k=" << b.k << ", property " << b.ell + 1 << ")";
      if (b.k < 1 || b.k > n) {
        fail(at.str() + ": k outside [1, " + std::to_string(n) + "]");
        continue;
      }
      if (b.ell < 0 || b.ell >= p) {
        fail(at.str() + ": property index out of range");
        continue;
      }
      if (!seen.insert({b.k, b.ell}).second) {
        fail(at.str() + ": duplicate entry");
        continue;
      }
      if (b.value < 0) {
        fail(at.str() + ": negative value");
        continue;
      }
      if (b.value > b.k) {
        fail(at.str() + ": value " + std::to_string(b.value) + " exceeds prefix length");
        continue;
      }
      dense[static_cast<std::size_t>(b.k - 1) * p + b.ell] = b.value;
    }
  };
  apply(spec.lower, lower, "lower");
  apply(spec.upper, upper, "upper");

  // Prefix bounds must be non-decreasing in k once defaults are in. Silent
  // tightening would hide mistakes, so non-monotone input is an error.
  if (errs.empty()) {
    for (int ell = 0; ell < p; ++ell) {
      for (int k = 2; k <= n; ++k) {
        std::size_t cur = static_cast<std::size_t>(k - 1) * p + ell;
        std::size_t prev = cur - p;
        if (upper[cur] < upper[prev]) {
          std::ostringstream os;
          os << "upper bounds for property " << ell + 1 << " decrease from k=" << k - 1
             << " to k=" << k << " (" << upper[prev] << " -> " << upper[cur] << ")";
          fail(os.str());
          break;
        }
      }
      for (int k = 2; k <= n; ++k) {
        std::size_t cur = static_cast<std::size_t>(k - 1) * p + ell;
        std::size_t prev = cur - p;
        if (lower[cur] < lower[prev]) {
          std::ostringstream os;
          os << "lower bounds for property " << ell + 1 << " decrease from k=" << k - 1
             << " to k=" << k << " (" << lower[prev] << " -> " << lower[cur] << ")";
          fail(os.str());
          break;
        }
      }
      for (int k = 1; k <= n; ++k) {
        std::size_t cur = static_cast<std::size_t>(k - 1) * p + ell;
        if (lower[cur] > upper[cur]) {
          std::ostringstream os;
          os << "lower bound " << lower[cur] << " exceeds upper bound " << upper[cur]
             << " at (k=" << k << ", property " << ell + 1 << ")";
          fail(os.str());
          break;
        }
      }
    }
  }

  double max_weight = 0.0;
  if (spec.weights.is_explicit()) {
    const Matrix& w = spec.weights.matrix();
    if (w.rows() != m || w.cols() != n) {
      std::ostringstream os;
      os << "weight matrix is " << w.rows() << "x" << w.cols() << ", expected " << m << "x" << n;
      fail(os.str());
    } else {
      for (double v : w.data()) {
        if (!std::isfinite(v) || v < 0.0) {
          fail("weight matrix has a negative or non-finite entry");
          break;
        }
        max_weight = std::max(max_weight, v);
      }
    }
  } else {
    for (auto& e : metric_spec_errors(spec.weights.metric(), m, n)) fail(e);
    if (errs.empty())
      // Metric weights are non-increasing in both arguments, so (1,1) is the peak.
      max_weight = metric_weight(spec.weights.metric(), m, 0, 0);
  }

  if (!errs.empty()) {
    if (errors) *errors = errs;
    return std::nullopt;
  }

  Instance inst;
  inst.m_ = m;
  inst.n_ = n;
  inst.p_ = p;
  inst.properties_ = std::move(properties);
  inst.lower_ = std::move(lower);
  inst.upper_ = std::move(upper);
  inst.has_lower_ = std::any_of(inst.lower_.begin(), inst.lower_.end(),
                                [](int v) { return v > 0; });
  inst.weights_ = spec.weights;
  inst.max_weight_ = max_weight;
  if (errors) errors->clear();
  return inst;
}

Instance validate_instance(const InstanceSpec& spec) {
  std::vector<std::string> errors;
  auto inst = try_validate_instance(spec, &errors);
  if (!inst) throw ValidationError(errors);
  return *std::move(inst);
}

InstanceSpec to_spec(const Instance& inst) {
  InstanceSpec spec;
  spec.m = inst.num_items();
  spec.n = inst.num_positions();
  spec.properties = inst.properties();
  for (int ell = 0; ell < inst.num_properties(); ++ell) {
    for (int k = 1; k <= inst.num_positions(); ++k) {
      if (inst.lower(k, ell) != 0)
        spec.lower.push_back({k, ell, inst.lower(k, ell)});
      if (inst.upper(k, ell) != k)
        spec.upper.push_back({k, ell, inst.upper(k, ell)});
    }
  }
  spec.weights = inst.weights();
  return spec;
}

namespace {

std::vector<std::string> ranking_shape_errors(const Instance& inst, const Ranking& r) {
  std::vector<std::string> errs;
  if (r.size() != inst.num_positions()) {
    errs.push_back("ranking has " + std::to_string(r.size()) + " entries, expected " +
                   std::to_string(inst.num_positions()));
    return errs;
  }
  std::vector<char> used(inst.num_items(), 0);
  for (int j = 0; j < r.size(); ++j) {
    int item = r[j];
    if (item < 0 || item >= inst.num_items()) {
      errs.push_back("position " + std::to_string(j + 1) + " holds item " +
                     std::to_string(item + 1) + " outside [1, " +
                     std::to_string(inst.num_items()) + "]");
      return errs;
    }
    if (used[item]) {
      errs.push_back("item " + std::to_string(item + 1) + " appears more than once");
      return errs;
    }
    used[item] = 1;
  }
  return errs;
}

}  // namespace

double ranking_value(const Instance& inst, const Ranking& r) {
  auto errs = ranking_shape_errors(inst, r);
  if (!errs.empty()) throw ValidationError(errs);
  double value = 0.0;
  for (int j = 0; j < r.size(); ++j) value += inst.weight(r[j], j);
  return value;
}

ConstraintReport check_constraints(const Instance& inst, const Ranking& r) {
  auto errs = ranking_shape_errors(inst, r);
  if (!errs.empty()) throw ValidationError(errs);

  const int n = inst.num_positions(), p = inst.num_properties();
  std::vector<std::vector<int>> member_props(inst.num_items());
  for (int ell = 0; ell < p; ++ell)
    for (int item : inst.properties()[ell]) member_props[item].push_back(ell);

  ConstraintReport report;
  report.entries.reserve(static_cast<std::size_t>(n) * p);
  std::vector<int> counts(p, 0);
  for (int k = 1; k <= n; ++k) {
    for (int ell : member_props[r[k - 1]]) ++counts[ell];
    for (int ell = 0; ell < p; ++ell) {
      ConstraintEntry e;
      e.k = k;
      e.ell = ell;
      e.count = counts[ell];
      e.lower = inst.lower(k, ell);
      e.upper = inst.upper(k, ell);
      e.slack = std::max(0, e.upper - e.count);
      e.deficit = std::max(0, e.lower - e.count);
      if (e.count > e.upper)
        e.factor = e.upper == 0 ? std::numeric_limits<double>::infinity()
                                : static_cast<double>(e.count) / e.upper;
      if (e.factor > 1.0 || e.deficit > 0) report.feasible = false;
      report.max_violation_factor = std::max(report.max_violation_factor, e.factor);
      report.entries.push_back(e);
    }
  }
  return report;
}

TypeProfile type_profile(const Instance& inst) {
  const int m = inst.num_items();
  TypeProfile tp;
  tp.item_types.assign(m, {});
  for (int ell = 0; ell < inst.num_properties(); ++ell)
    for (int item : inst.properties()[ell]) tp.item_types[item].push_back(ell);

  // Iterating properties in ascending order leaves each T_i sorted already.
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int i = 0; i < m; ++i) {
    tp.delta = std::max(tp.delta, static_cast<int>(tp.item_types[i].size()));
    groups[tp.item_types[i]].push_back(i);
  }
  tp.type_vectors.reserve(groups.size());
  tp.classes.reserve(groups.size());
  for (auto& [type, items] : groups) {
    tp.type_vectors.push_back(type);
    tp.classes.push_back(std::move(items));
  }
  return tp;
}

}  // namespace fairrank
