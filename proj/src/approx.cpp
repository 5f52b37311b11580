#include "fairrank/approx.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fairrank/error.hpp"
#include "fairrank/feasibility.hpp"

namespace fairrank {

namespace {

constexpr std::int64_t kMaxCells = 50'000'000;

}  // namespace

ApproxReport solve_approx(const Instance& inst) {
  const int m = inst.num_items(), n = inst.num_positions(), p = inst.num_properties();

  if (inst.has_lower_bounds()) {
    for (int k = 1; k <= n; ++k)
      for (int ell = 0; ell < p; ++ell)
        if (inst.lower(k, ell) > 0)
          throw PreconditionError("lower bound at (k=" + std::to_string(k) + ", property " +
                                  std::to_string(ell + 1) +
                                  ") is positive; this solver handles upper bounds only");
  }
  const std::int64_t cells = static_cast<std::int64_t>(m) * n;
  if (cells > kMaxCells)
    throw BudgetError("cell sort over " + std::to_string(cells) + " entries exceeds the cap");

  std::vector<std::vector<int>> member_props(m);
  for (int ell = 0; ell < p; ++ell)
    for (int item : inst.properties()[ell]) member_props[item].push_back(ell);

  ApproxReport report;
  TypeProfile tp = type_profile(inst);
  report.delta = tp.delta;
  report.guarantee_factor = tp.delta + 2;
  report.abundance_warning = !abundance_check(inst).satisfied;

  // Phase 1: admit cells in order of decreasing weight (ties: smaller item, then
  // smaller position) while rows, columns, and every prefix bound stay exactly
  // satisfied. The result is maximal: nothing admissible is left behind.
  std::vector<double> w(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(i) * n + j] = inst.weight(i, j);

  std::vector<std::int64_t> order(static_cast<std::size_t>(m) * n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    if (w[a] != w[b]) return w[a] > w[b];
    return a < b;  // row-major id: smaller item first, then smaller position
  });

  std::vector<int> assigned(n, -1);          // position -> item
  std::vector<char> row_used(m, 0);
  std::vector<std::vector<int>> z_count(p, std::vector<int>(n + 1, 0));
  auto admissible = [&](const std::vector<std::vector<int>>& count, int item, int pos) {
    for (int ell : member_props[item])
      for (int k = pos + 1; k <= n; ++k)
        if (count[ell][k] + 1 > inst.upper(k, ell)) return false;
    return true;
  };
  auto admit = [&](std::vector<std::vector<int>>& count, int item, int pos) {
    for (int ell : member_props[item])
      for (int k = pos + 1; k <= n; ++k) ++count[ell][k];
  };

  for (std::int64_t id : order) {
    int item = static_cast<int>(id / n), pos = static_cast<int>(id % n);
    if (row_used[item] || assigned[pos] != -1) continue;
    if (!admissible(z_count, item, pos)) continue;
    row_used[item] = 1;
    assigned[pos] = item;
    admit(z_count, item, pos);
    report.phase1_cells.push_back({item, pos});
  }

  // Phase 2: fill the leftover positions in order with the smallest-index unused
  // item, charging this layer against the bounds on its own. Each layer respects
  // U exactly, so their union exceeds no bound by more than 2x.
  std::vector<std::vector<int>> y_count(p, std::vector<int>(n + 1, 0));
  for (int pos = 0; pos < n; ++pos) {
    if (assigned[pos] != -1) continue;
    int pick = -1;
    for (int item = 0; item < m; ++item) {
      if (row_used[item]) continue;
      if (admissible(y_count, item, pos)) {
        pick = item;
        break;
      }
    }
    if (pick == -1) {
      report.complete = false;
      report.stuck_position = pos + 1;
      return report;
    }
    row_used[pick] = 1;
    assigned[pos] = pick;
    admit(y_count, pick, pos);
    report.phase2_fills.push_back({pos, pick});
  }

  report.complete = true;
  report.ranking = Ranking{std::move(assigned)};
  report.value = ranking_value(inst, report.ranking);
  ConstraintReport cr = check_constraints(inst, report.ranking);
  for (const auto& e : cr.entries)
    if (e.factor > 1.0)
      report.violations.push_back({e.k, e.ell, e.count, e.upper, e.factor});
  report.max_violation_factor = cr.max_violation_factor;
  return report;
}

}  // namespace fairrank
