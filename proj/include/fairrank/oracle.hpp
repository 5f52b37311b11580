#pragma once

#include <cstdint>

#include "fairrank/model.hpp"

namespace fairrank {

struct OracleOptions {
  double max_assignments = 1e7;  // falling-factorial cap m * (m-1) * ... * (m-n+1)
  int threads = 0;               // 0 = library default; results identical regardless
};

struct OracleResult {
  bool feasible = false;
  Ranking ranking;          // lexicographically smallest optimum when feasible
  double value = 0.0;
  std::uint64_t feasible_count = 0;  // complete rankings that satisfy all bounds
};

// Reference solver: depth-first enumeration of ordered n-subsets with prefix-bound
// pruning. Every prefix of a feasible ranking is feasible, so pruning on the bound
// at the just-placed position discards no feasible completion. Branches on the
// first position run in parallel; the merge keeps the result identical to a serial
// scan. Throws BudgetError when the assignment count exceeds the cap.
OracleResult brute_force_solve(const Instance& inst, const OracleOptions& opt = {});

}  // namespace fairrank
