#include "fairrank/dp.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "fairrank/error.hpp"

namespace fairrank {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct Entry {
  double value = 0.0;
  int back_type = -1;  // class whose next item was placed to reach this state
};

void check_monge_precondition(const Instance& inst, MongeCheckMode mode) {
  bool check = mode == MongeCheckMode::always ||
               (mode == MongeCheckMode::automatic && inst.weights().is_explicit());
  if (!check) return;
  Matrix w = inst.weights().is_explicit()
                 ? inst.weights().matrix()
                 : gen_weights(inst.weights().metric(), inst.num_items(), inst.num_positions());
  MongeWitness wit = check_monge(w);
  if (!wit.holds) throw PreconditionError("weight conditions fail: " + wit.describe());
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s < a ? ~std::uint64_t{0} : s;
}

}  // namespace

std::uint64_t estimate_dp_states(const Instance& inst) {
  TypeProfile tp = type_profile(inst);
  const int n = inst.num_positions();
  // Count tuples with sum <= n and s_ell <= min(class size, n) by convolving the
  // per-class count polynomials; saturate far beyond any usable budget.
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (const auto& cls : tp.classes) {
    int cap = std::min<int>(n, static_cast<int>(cls.size()));
    std::vector<std::uint64_t> next(n + 1, 0);
    for (int total = 0; total <= n; ++total) {
      if (ways[total] == 0) continue;
      for (int take = 0; take <= cap && total + take <= n; ++take)
        next[total + take] = saturating_add(next[total + take], ways[total]);
    }
    ways = std::move(next);
  }
  std::uint64_t count = 0;
  for (std::uint64_t w : ways) count = saturating_add(count, w);
  return count;
}

DpResult solve_dp(const Instance& inst, const DpOptions& opt) {
  check_monge_precondition(inst, opt.monge_check);

  DpResult result;
  result.estimated_states = estimate_dp_states(inst);
  if (result.estimated_states > opt.state_budget)
    throw BudgetError("estimated table size " + std::to_string(result.estimated_states) +
                      " exceeds the state budget " + std::to_string(opt.state_budget));

  TypeProfile tp = type_profile(inst);
  const int n = inst.num_positions(), p = inst.num_properties();
  const int q = tp.num_types();

  // Per class, the n best items; weights are non-increasing in the item index, so
  // some optimal ranking uses a prefix of every class and the count tuple is a
  // complete state.
  std::vector<std::vector<int>> items(q);
  std::vector<int> cap(q);
  for (int c = 0; c < q; ++c) {
    int take = std::min<int>(n, static_cast<int>(tp.classes[c].size()));
    items[c].assign(tp.classes[c].begin(), tp.classes[c].begin() + take);
    cap[c] = take;
  }

  using Table = std::unordered_map<std::vector<int>, Entry, VecHash>;
  std::vector<Table> levels(n + 1);
  levels[0].emplace(std::vector<int>(q, 0), Entry{0.0, -1});
  result.states_created = 1;

  std::vector<int> counts(p, 0);
  auto state_feasible = [&](const std::vector<int>& s, int k) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int c = 0; c < q; ++c)
      if (s[c])
        for (int ell : tp.type_vectors[c]) counts[ell] += s[c];
    for (int ell = 0; ell < p; ++ell)
      if (counts[ell] < inst.lower(k, ell) || counts[ell] > inst.upper(k, ell)) return false;
    return true;
  };

  for (int k = 1; k <= n; ++k) {
    Table& prev = levels[k - 1];
    Table& cur = levels[k];
    // Tuples already found to break a bound at this level; skipped on re-visits.
    std::unordered_set<std::vector<int>, VecHash> rejected;
    for (const auto& [state, entry] : prev) {
      std::vector<int> succ = state;
      for (int c = 0; c < q; ++c) {
        if (state[c] >= cap[c]) continue;
        ++succ[c];
        double cand = entry.value + inst.weight(items[c][state[c]], k - 1);
        auto it = cur.find(succ);
        if (it != cur.end()) {
          // Ties keep the smallest class index for a deterministic traceback.
          if (cand > it->second.value ||
              (cand == it->second.value && c < it->second.back_type))
            it->second = Entry{cand, c};
        } else if (!rejected.contains(succ)) {
          if (state_feasible(succ, k)) {
            cur.emplace(succ, Entry{cand, c});
            ++result.states_created;
          } else {
            rejected.insert(succ);
          }
        }
        --succ[c];
      }
    }
  }

  const Table& final_level = levels[n];
  if (final_level.empty()) {
    result.feasible = false;
    return result;
  }

  // Hash order is arbitrary; break value ties toward the smallest tuple.
  const std::vector<int>* best_state = nullptr;
  const Entry* best_entry = nullptr;
  for (const auto& [state, entry] : final_level) {
    if (!best_entry || entry.value > best_entry->value ||
        (entry.value == best_entry->value && state < *best_state)) {
      best_state = &state;
      best_entry = &entry;
    }
  }

  std::vector<int> out(n, -1);
  std::vector<int> state = *best_state;
  for (int k = n; k >= 1; --k) {
    const Entry& e = levels[k].at(state);
    int c = e.back_type;
    out[k - 1] = items[c][state[c] - 1];
    --state[c];
  }

  result.feasible = true;
  result.ranking = Ranking{std::move(out)};
  result.value = ranking_value(inst, result.ranking);
  return result;
}

}  // namespace fairrank
