#pragma once

#include <vector>

#include "fairrank/model.hpp"

namespace fairrank {

// Per prefix length k, the set of properties whose upper bound leaves room for one
// more member at position k:
//     S_k = { ell : U[k-1][ell] + 1 <= U[k][ell] },  with U[0][ell] = 0.
// The condition is satisfied when, for every k, at least n items belong only to
// properties in S_k. It guarantees a feasible ranking exists (and that the
// two-phase approximation never gets stuck), but is not necessary for feasibility.
struct AbundanceReport {
  struct Position {
    int k = 0;
    std::vector<int> open_properties;  // S_k, ascending
    int placeable_items = 0;           // |{ i : T_i subset of S_k }|
  };
  std::vector<Position> positions;  // k = 1..n
  bool satisfied = false;
  bool lower_bound_warning = false;  // instance has L > 0, which this test ignores
};

AbundanceReport abundance_check(const Instance& inst);

enum class Feasibility { feasible, infeasible };

struct FeasibilityOptions {
  int max_items = 10;  // exhaustive search cap
};

// Decides feasibility exactly by enumeration. Throws BudgetError when the
// instance exceeds the cap.
Feasibility feasibility_exact(const Instance& inst, const FeasibilityOptions& opt = {});

}  // namespace fairrank
