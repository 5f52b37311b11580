#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fairrank/dispatch.hpp"
#include "fairrank/generators.hpp"

namespace fairrank {

// One generated instance run through one solver. Rows are emitted in suite/seed
// order no matter how many workers ran them.
struct BenchRow {
  std::string suite;
  std::uint64_t seed = 0;
  GenParams params;
  int delta_actual = 0;
  std::string algorithm;
  bool feasible = false;
  bool has_value = false;
  double value = 0.0;
  bool has_oracle = false;
  double oracle_value = 0.0;
  bool oracle_feasible = false;
  double max_violation_factor = 1.0;
  double runtime_ms = 0.0;
};

// Suite spec:
//   { "suites": [ { "name": "...", "count": 20, "base_seed": 1,
//                   "m": 7, "n": 4, "p": 2, "delta": 1,
//                   "metric": "dcg", "quality_dist": "uniform_real",
//                   "theta": 0.5, "lower_rate": 0.0,
//                   "algorithms": ["greedy"], "oracle": true } ] }
// Instance i of a suite uses seed base_seed + i. With "oracle": true every row
// also carries the enumeration optimum (skipped silently when it would blow the
// assignment cap).
struct BenchSuite {
  std::string name;
  int count = 1;
  std::uint64_t base_seed = 1;
  GenParams params;  // seed field is overwritten per instance
  std::vector<Algo> algorithms;
  bool with_oracle = false;
};

std::vector<BenchSuite> parse_bench_suites(const nlohmann::json& spec);
std::vector<BenchRow> run_bench(const std::vector<BenchSuite>& suites, int threads = 0);

std::string bench_csv(const std::vector<BenchRow>& rows);

// Two SVG charts: value ratio per seed, and mean runtime against instance size.
void write_bench_plots(const std::vector<BenchRow>& rows, const std::string& dir);

}  // namespace fairrank
