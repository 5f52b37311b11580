#pragma once

#include <string>
#include <vector>

#include "fairrank/matrix.hpp"
#include "fairrank/model.hpp"

namespace fairrank::testing {

struct BoundSpec {
  int k;      // 1-based prefix
  int ell;    // 0-based property
  int value;
};

// Assembles and validates an instance from 0-based pieces.
Instance make_instance(int m, int n, std::vector<std::vector<int>> properties,
                       const Matrix& weights, std::vector<BoundSpec> upper = {},
                       std::vector<BoundSpec> lower = {});

Instance make_metric_instance(int m, int n, std::vector<std::vector<int>> properties,
                              MetricSpec metric, std::vector<BoundSpec> upper = {},
                              std::vector<BoundSpec> lower = {});

struct RefBest {
  bool feasible = false;
  Ranking ranking;
  double value = 0.0;
  std::uint64_t feasible_count = 0;
};

// Unpruned enumeration of every ordered n-subset; keeps the lexicographically
// smallest maximizer. Deliberately shares nothing with the library's search.
RefBest ref_enumerate(const Instance& inst);

// Literal quadruple/pair scan of the three weight conditions, bool verdict only.
bool ref_monge_holds(const Matrix& w, bool strict = false);

// True when some n of the edges are pairwise vertex-disjoint.
bool has_n_disjoint_edges(const std::vector<std::vector<int>>& edges, int n);

struct CliResult {
  int exit_code = -1;
  std::string out;  // captured stdout
};

// Runs the fairrank binary with the given argument string. stderr goes to the
// test log. The env variant prepends VAR=value assignments to the command.
CliResult run_cli(const std::string& args);
CliResult run_cli_env(const std::string& env_prefix, const std::string& args);

// Scratch directory for CLI round trips, created once per process.
std::string scratch_dir();
std::string write_scratch_file(const std::string& name, const std::string& content);

}  // namespace fairrank::testing
