#pragma once

#include <cstdint>

#include "fairrank/model.hpp"

namespace fairrank {

// Whether solvers verify the exchange/monotonicity conditions on W before running.
// automatic: explicit matrices are checked in O(mn); metric-backed weights are
// accepted as-is, since every recipe produces conforming matrices by construction
// (validated at instance build time, covered by property tests).
enum class MongeCheckMode { automatic, always, never };

struct GreedyOptions {
  MongeCheckMode monge_check = MongeCheckMode::automatic;
};

struct GreedyResult {
  bool feasible = false;
  Ranking ranking;
  double value = 0.0;
  int stuck_position = 0;     // 1-based position with no admissible item, when infeasible
  std::uint64_t steps = 0;    // elementary operations, O(m + n * p)
};

// Exact solver for disjoint properties (every item in at most one) with upper
// bounds only. Scans positions in order and places the smallest-index unused item
// whose property count stays within U at that prefix; with weights non-increasing
// in the item index, smaller index never costs value. Index-driven, so W is read
// only to price the final ranking.
//
// Throws PreconditionError when an item has two properties, a lower bound is
// positive, or (for explicit W under automatic/always checking) the exchange
// conditions fail; the message names the witness.
GreedyResult solve_greedy(const Instance& inst, const GreedyOptions& opt = {});

}  // namespace fairrank
