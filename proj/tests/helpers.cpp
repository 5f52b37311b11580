#include "helpers.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "fairrank/error.hpp"

#ifndef FAIRRANK_BIN
#define FAIRRANK_BIN "fairrank"
#endif

namespace fairrank::testing {

Instance make_instance(int m, int n, std::vector<std::vector<int>> properties,
                       const Matrix& weights, std::vector<BoundSpec> upper,
                       std::vector<BoundSpec> lower) {
  InstanceSpec spec;
  spec.m = m;
  spec.n = n;
  spec.properties = std::move(properties);
  for (const auto& b : upper) spec.upper.push_back({b.k, b.ell, b.value});
  for (const auto& b : lower) spec.lower.push_back({b.k, b.ell, b.value});
  spec.weights = WeightSource::from_matrix(weights);
  return validate_instance(spec);
}

Instance make_metric_instance(int m, int n, std::vector<std::vector<int>> properties,
                              MetricSpec metric, std::vector<BoundSpec> upper,
                              std::vector<BoundSpec> lower) {
  InstanceSpec spec;
  spec.m = m;
  spec.n = n;
  spec.properties = std::move(properties);
  for (const auto& b : upper) spec.upper.push_back({b.k, b.ell, b.value});
  for (const auto& b : lower) spec.lower.push_back({b.k, b.ell, b.value});
  spec.weights = WeightSource::from_metric(std::move(metric));
  return validate_instance(spec);
}

RefBest ref_enumerate(const Instance& inst) {
  const int m = inst.num_items(), n = inst.num_positions();
  RefBest best;
  std::vector<int> current;
  std::vector<char> used(m, 0);

  auto feasible_complete = [&](const Ranking& r) {
    return check_constraints(inst, r).feasible;
  };

  // Plain ordered-subset recursion, no pruning anywhere.
  auto walk = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      Ranking r{current};
      if (!feasible_complete(r)) return;
      ++best.feasible_count;
      const double v = ranking_value(inst, r);
      if (!best.feasible || v > best.value) {
        best.feasible = true;
        best.value = v;
        best.ranking = r;
      }
      return;
    }
    for (int item = 0; item < m; ++item) {
      if (used[item]) continue;
      used[item] = 1;
      current.push_back(item);
      self(self, depth + 1);
      current.pop_back();
      used[item] = 0;
    }
  };
  walk(walk, 0);
  return best;
}

bool ref_monge_holds(const Matrix& w, bool strict) {
  const int m = w.rows(), n = w.cols();
  auto bad = [&](double lhs, double rhs) { return strict ? lhs <= rhs : lhs < rhs; };
  for (int i1 = 0; i1 < m; ++i1)
    for (int i2 = i1 + 1; i2 < m; ++i2)
      for (int j = 0; j < n; ++j)
        if (bad(w(i1, j), w(i2, j))) return false;
  for (int j1 = 0; j1 < n; ++j1)
    for (int j2 = j1 + 1; j2 < n; ++j2)
      for (int i = 0; i < m; ++i)
        if (bad(w(i, j1), w(i, j2))) return false;
  for (int i1 = 0; i1 < m; ++i1)
    for (int i2 = i1 + 1; i2 < m; ++i2)
      for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = j1 + 1; j2 < n; ++j2)
          if (bad(w(i1, j1) + w(i2, j2), w(i1, j2) + w(i2, j1))) return false;
  return true;
}

bool has_n_disjoint_edges(const std::vector<std::vector<int>>& edges, int n) {
  const int e = static_cast<int>(edges.size());
  if (n <= 0) return true;
  if (n > e) return false;
  std::vector<int> chosen;
  auto disjoint_from_chosen = [&](int cand) {
    std::set<int> verts(edges[cand].begin(), edges[cand].end());
    for (int c : chosen)
      for (int v : edges[c])
        if (verts.count(v)) return false;
    return true;
  };
  auto walk = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(chosen.size()) == n) return true;
    for (int cand = start; cand < e; ++cand) {
      if (!disjoint_from_chosen(cand)) continue;
      chosen.push_back(cand);
      if (self(self, cand + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return walk(walk, 0);
}

CliResult run_cli(const std::string& args) { return run_cli_env("", args); }

CliResult run_cli_env(const std::string& env_prefix, const std::string& args) {
  CliResult result;
  std::string cmd = std::string(FAIRRANK_BIN) + " " + args;
  if (!env_prefix.empty()) cmd = env_prefix + " " + cmd;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe))
    result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string scratch_dir() {
  static const std::string dir = [] {
    auto path = std::filesystem::temp_directory_path() /
                ("fairrank_tests_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
    return path.string();
  }();
  return dir;
}

std::string write_scratch_file(const std::string& name, const std::string& content) {
  const std::string path = scratch_dir() + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace fairrank::testing
