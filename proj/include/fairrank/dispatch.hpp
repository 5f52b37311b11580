#pragma once

#include <optional>
#include <string>

#include "fairrank/approx.hpp"
#include "fairrank/dp.hpp"
#include "fairrank/flow.hpp"
#include "fairrank/greedy.hpp"
#include "fairrank/model.hpp"
#include "fairrank/oracle.hpp"

namespace fairrank {

enum class Algo { automatic, greedy, dp, flow, approx, oracle };

const char* algo_name(Algo algo);
bool parse_algo(const std::string& name, Algo* out);

// Selection rule, in order:
//   1. disjoint properties, no lower bounds        -> greedy
//   2. disjoint properties, some lower bound       -> flow
//   3. estimated DP states <= dp_auto_limit        -> dp
//   4. no lower bounds                             -> approx
//   5. otherwise                                   -> nothing applies
// Explicit weight matrices that fail the exchange conditions skip the exact
// solvers (which require them) and fall through to 4/5.
struct SelectOptions {
  std::uint64_t dp_auto_limit = 1'000'000;
};
std::optional<Algo> select_algorithm(const Instance& inst, const SelectOptions& sel = {},
                                     std::string* why = nullptr);

struct SolveOptions {
  Algo algo = Algo::automatic;
  SelectOptions select;
  OracleOptions oracle;
  DpOptions dp;
  FlowOptions flow;
  GreedyOptions greedy;
};

struct SolveReport {
  std::string algorithm;  // solver actually used
  bool feasible = false;
  bool no_applicable = false;  // automatic mode found nothing suitable
  std::string message;         // selection rationale / infeasibility note
  Ranking ranking;
  double value = 0.0;
  std::string guarantee;  // "exact" or "(delta+2)-approx"
  std::vector<ApproxViolation> violations;  // empty for exact solvers
  double max_violation_factor = 1.0;
  double runtime_ms = 0.0;
};

// Runs the requested (or automatically selected) solver and normalizes the
// outcome. Solver preconditions surface as PreconditionError when an algorithm
// was forced; automatic mode only picks solvers whose preconditions hold.
SolveReport dispatch_solve(const Instance& inst, const SolveOptions& opt = {});

}  // namespace fairrank
