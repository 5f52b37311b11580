#include "fairrank/feasibility.hpp"

#include <string>

#include "fairrank/error.hpp"
#include "fairrank/oracle.hpp"

namespace fairrank {

AbundanceReport abundance_check(const Instance& inst) {
  const int n = inst.num_positions(), p = inst.num_properties();
  AbundanceReport report;
  report.lower_bound_warning = inst.has_lower_bounds();
  report.satisfied = true;

  std::vector<std::vector<int>> member_props(inst.num_items());
  for (int ell = 0; ell < p; ++ell)
    for (int item : inst.properties()[ell]) member_props[item].push_back(ell);

  std::vector<char> open(p, 0);
  report.positions.reserve(n);
  for (int k = 1; k <= n; ++k) {
    AbundanceReport::Position pos;
    pos.k = k;
    for (int ell = 0; ell < p; ++ell) {
      int prev = k == 1 ? 0 : inst.upper(k - 1, ell);
      open[ell] = prev + 1 <= inst.upper(k, ell) ? 1 : 0;
      if (open[ell]) pos.open_properties.push_back(ell);
    }
    for (int i = 0; i < inst.num_items(); ++i) {
      bool placeable = true;
      for (int ell : member_props[i]) {
        if (!open[ell]) {
          placeable = false;
          break;
        }
      }
      if (placeable) ++pos.placeable_items;
    }
    if (pos.placeable_items < n) report.satisfied = false;
    report.positions.push_back(std::move(pos));
  }
  return report;
}

Feasibility feasibility_exact(const Instance& inst, const FeasibilityOptions& opt) {
  if (inst.num_items() > opt.max_items)
    throw BudgetError("exact feasibility check limited to " + std::to_string(opt.max_items) +
                      " items, instance has " + std::to_string(inst.num_items()));
  OracleResult result = brute_force_solve(inst);
  return result.feasible ? Feasibility::feasible : Feasibility::infeasible;
}

}  // namespace fairrank
