#include "fairrank/greedy.hpp"

#include <algorithm>
#include <string>

#include "fairrank/error.hpp"

namespace fairrank {

namespace {

void check_preconditions(const Instance& inst, const GreedyOptions& opt,
                         std::vector<int>& item_prop) {
  const int m = inst.num_items();
  item_prop.assign(m, -1);
  for (int ell = 0; ell < inst.num_properties(); ++ell) {
    for (int item : inst.properties()[ell]) {
      if (item_prop[item] != -1)
        throw PreconditionError("item " + std::to_string(item + 1) +
                                " belongs to properties " + std::to_string(item_prop[item] + 1) +
                                " and " + std::to_string(ell + 1) +
                                "; this solver needs disjoint properties");
      item_prop[item] = ell;
    }
  }
  if (inst.has_lower_bounds()) {
    for (int k = 1; k <= inst.num_positions(); ++k)
      for (int ell = 0; ell < inst.num_properties(); ++ell)
        if (inst.lower(k, ell) > 0)
          throw PreconditionError("lower bound at (k=" + std::to_string(k) + ", property " +
                                  std::to_string(ell + 1) +
                                  ") is positive; this solver handles upper bounds only");
  }
  bool check = opt.monge_check == MongeCheckMode::always ||
               (opt.monge_check == MongeCheckMode::automatic && inst.weights().is_explicit());
  if (check) {
    Matrix w = inst.weights().is_explicit()
                   ? inst.weights().matrix()
                   : gen_weights(inst.weights().metric(), inst.num_items(),
                                 inst.num_positions());
    MongeWitness wit = check_monge(w);
    if (!wit.holds) throw PreconditionError("weight conditions fail: " + wit.describe());
  }
}

}  // namespace

GreedyResult solve_greedy(const Instance& inst, const GreedyOptions& opt) {
  std::vector<int> item_prop;
  check_preconditions(inst, opt, item_prop);

  const int m = inst.num_items(), n = inst.num_positions(), p = inst.num_properties();
  GreedyResult result;

  // One queue per property plus one for free items; each holds its n best
  // (smallest-index) members. Queue heads are the only candidates: within a
  // property, an earlier item is never worse, and admissibility depends on the
  // property alone.
  std::vector<std::vector<int>> queue(p + 1);
  for (int ell = 0; ell < p; ++ell) {
    const auto& prop = inst.properties()[ell];
    int take = std::min<int>(n, static_cast<int>(prop.size()));
    queue[ell].assign(prop.begin(), prop.begin() + take);
    result.steps += prop.size();
  }
  for (int item = 0; item < m && static_cast<int>(queue[p].size()) < n; ++item) {
    ++result.steps;
    if (item_prop[item] == -1) queue[p].push_back(item);
  }

  std::vector<int> head(p + 1, 0);
  std::vector<int> counted(p, 0);
  std::vector<int> out;
  out.reserve(n);
  for (int k = 1; k <= n; ++k) {
    int pick = -1, pick_queue = -1;
    for (int ell = 0; ell <= p; ++ell) {
      ++result.steps;
      if (head[ell] >= static_cast<int>(queue[ell].size())) continue;
      if (ell < p && counted[ell] + 1 > inst.upper(k, ell)) continue;
      int candidate = queue[ell][head[ell]];
      if (pick == -1 || candidate < pick) {
        pick = candidate;
        pick_queue = ell;
      }
    }
    if (pick == -1) {
      result.feasible = false;
      result.stuck_position = k;
      return result;
    }
    ++head[pick_queue];
    if (pick_queue < p) ++counted[pick_queue];
    out.push_back(pick);
  }

  result.feasible = true;
  result.ranking = Ranking{std::move(out)};
  result.value = ranking_value(inst, result.ranking);
  result.steps += n;
  return result;
}

}  // namespace fairrank
