#pragma once

#include <cstdint>

#include "fairrank/greedy.hpp"  // MongeCheckMode
#include "fairrank/model.hpp"

namespace fairrank {

struct DpOptions {
  std::uint64_t state_budget = 100'000'000;  // reject when the estimate exceeds this
  MongeCheckMode monge_check = MongeCheckMode::automatic;
};

struct DpResult {
  bool feasible = false;
  Ranking ranking;
  double value = 0.0;
  std::uint64_t states_created = 0;    // table entries materialized
  std::uint64_t estimated_states = 0;  // upper bound computed before solving
};

// Number of count tuples (s_1..s_q) with sum <= n and s_ell bounded by the
// truncated class sizes; saturates instead of overflowing. This is the table size
// the solver would materialize on an unconstrained instance.
std::uint64_t estimate_dp_states(const Instance& inst);

// Exact solver for any overlap and mixed lower/upper bounds. Items are grouped by
// their property set; within a class, weights non-increasing in the item index
// mean an optimal ranking uses a prefix of each class, so a state is just the
// count taken from each class. States are kept in a sparse per-level table;
// tuples that break a prefix bound are never stored. Transition ties prefer the
// smallest class index, which pins down the reconstruction deterministically.
//
// Throws BudgetError when the state estimate exceeds the budget and
// PreconditionError on a failed weight-condition check.
DpResult solve_dp(const Instance& inst, const DpOptions& opt = {});

}  // namespace fairrank
