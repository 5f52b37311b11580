#pragma once

#include <utility>
#include <vector>

#include "fairrank/model.hpp"

namespace fairrank {

struct ApproxViolation {
  int k = 0;
  int ell = 0;
  int count = 0;
  int bound = 0;
  double factor = 1.0;
};

struct ApproxReport {
  bool complete = false;  // a full ranking was assembled
  Ranking ranking;        // valid only when complete
  double value = 0.0;
  int delta = 0;                  // max properties per item on this instance
  double guarantee_factor = 0.0;  // delta + 2
  std::vector<ApproxViolation> violations;  // entries with count > U
  double max_violation_factor = 1.0;        // never exceeds 2
  std::vector<std::pair<int, int>> phase1_cells;  // (item, position), admission order
  std::vector<std::pair<int, int>> phase2_fills;  // (position, item), fill order
  bool abundance_warning = false;  // completion is only guaranteed under abundance
  int stuck_position = 0;          // 1-based, set when !complete
};

// Two-phase approximation for upper bounds only, any overlap. Weights are
// non-negative by construction, which the guarantee relies on.
// Phase 1 walks all cells by decreasing weight and admits one per row/column while
// every prefix bound stays exactly satisfied; the admitted partial solution is
// maximal, which bounds the optimum by (delta + 2) times its value. Phase 2 fills
// the remaining positions in order with the smallest-index leftover item, counting
// the fill layer against the bounds separately, so the combined ranking exceeds no
// bound by more than a factor of 2. Under the abundance condition phase 2 cannot
// get stuck; otherwise the report carries the stuck position.
//
// Throws PreconditionError on lower bounds.
ApproxReport solve_approx(const Instance& inst);

}  // namespace fairrank
