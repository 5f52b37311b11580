#include "fairrank/oracle.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fairrank/error.hpp"

namespace fairrank {

namespace {

struct SearchContext {
  const Instance* inst;
  std::vector<std::vector<int>> member_props;  // property ids per item
  bool any_lower = false;
};

struct BranchBest {
  bool found = false;
  double value = 0.0;
  std::vector<int> ranking;
  std::uint64_t feasible_count = 0;
};

// Places positions depth+1..n given the current prefix. Items are tried in
// ascending order and a strictly better value replaces the incumbent, so the
// first optimum kept is the lexicographically smallest.
void search(const SearchContext& ctx, int depth, double prefix_value, std::vector<int>& prefix,
            std::vector<char>& used, std::vector<int>& counts, BranchBest& best) {
  const Instance& inst = *ctx.inst;
  const int n = inst.num_positions(), m = inst.num_items();
  if (depth == n) {
    ++best.feasible_count;
    if (!best.found || prefix_value > best.value) {
      best.found = true;
      best.value = prefix_value;
      best.ranking = prefix;
    }
    return;
  }
  const int k = depth + 1;  // prefix length after placing this position
  for (int item = 0; item < m; ++item) {
    if (used[item]) continue;
    bool ok = true;
    for (int ell : ctx.member_props[item]) {
      if (counts[ell] + 1 > inst.upper(k, ell)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (int ell : ctx.member_props[item]) ++counts[ell];
    if (ctx.any_lower) {
      // The bound at this prefix is final once position k is filled; any deficit
      // here dooms every completion.
      for (int ell = 0; ell < inst.num_properties() && ok; ++ell)
        if (counts[ell] < inst.lower(k, ell)) ok = false;
    }
    if (ok) {
      used[item] = 1;
      prefix.push_back(item);
      search(ctx, depth + 1, prefix_value + inst.weight(item, depth), prefix, used, counts,
             best);
      prefix.pop_back();
      used[item] = 0;
    }
    for (int ell : ctx.member_props[item]) --counts[ell];
  }
}

BranchBest run_branch(const SearchContext& ctx, int first_item) {
  const Instance& inst = *ctx.inst;
  BranchBest best;
  std::vector<int> prefix;
  std::vector<char> used(inst.num_items(), 0);
  std::vector<int> counts(inst.num_properties(), 0);

  bool ok = true;
  for (int ell : ctx.member_props[first_item])
    if (1 > inst.upper(1, ell)) ok = false;
  if (ok) {
    for (int ell : ctx.member_props[first_item]) ++counts[ell];
    if (ctx.any_lower)
      for (int ell = 0; ell < inst.num_properties() && ok; ++ell)
        if (counts[ell] < inst.lower(1, ell)) ok = false;
    if (ok) {
      used[first_item] = 1;
      prefix.push_back(first_item);
      search(ctx, 1, inst.weight(first_item, 0), prefix, used, counts, best);
    }
  }
  return best;
}

}  // namespace

OracleResult brute_force_solve(const Instance& inst, const OracleOptions& opt) {
  const int m = inst.num_items(), n = inst.num_positions();
  double assignments = 1.0;
  for (int r = 0; r < n; ++r) assignments *= m - r;
  if (assignments > opt.max_assignments) {
    std::ostringstream os;
    os << "enumeration would visit about " << assignments << " assignments, cap is "
       << opt.max_assignments;
    throw BudgetError(os.str());
  }

  SearchContext ctx;
  ctx.inst = &inst;
  ctx.member_props.resize(m);
  for (int ell = 0; ell < inst.num_properties(); ++ell)
    for (int item : inst.properties()[ell]) ctx.member_props[item].push_back(ell);
  ctx.any_lower = inst.has_lower_bounds();

  // Each first-position choice is an independent branch. Merging in item order
  // with strict improvement reproduces the serial scan exactly, so thread count
  // never changes the result.
  std::vector<BranchBest> branches(m);
  int threads = opt.threads;
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  threads = 1;
#endif
  bool parallel = threads > 1 && m > 1;
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (parallel)
  for (int first = 0; first < m; ++first) branches[first] = run_branch(ctx, first);

  OracleResult result;
  BranchBest best;
  for (int first = 0; first < m; ++first) {
    const BranchBest& b = branches[first];
    best.feasible_count += b.feasible_count;
    if (b.found && (!best.found || b.value > best.value)) {
      best.found = true;
      best.value = b.value;
      best.ranking = b.ranking;
    }
  }
  result.feasible = best.found;
  result.feasible_count = best.feasible_count;
  if (best.found) {
    result.ranking = Ranking{std::move(best.ranking)};
    result.value = best.value;
  }
  return result;
}

}  // namespace fairrank
