#include "fairrank/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "fairrank/error.hpp"

namespace fairrank {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

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

// Multi-unit arc: unit f+1 is available at unit_costs[f]. Ascending costs keep the
// residual problem convex, so shortest augmenting paths stay optimal.
struct MultiArc {
  int from = 0, to = 0;
  std::vector<std::int64_t> unit_costs;
  int flow = 0;

  int capacity() const { return static_cast<int>(unit_costs.size()); }
  bool forward_open() const { return flow < capacity(); }
  std::int64_t forward_cost() const { return unit_costs[flow]; }
  bool backward_open() const { return flow > 0; }
  std::int64_t backward_cost() const { return -unit_costs[flow - 1]; }
};

struct Graph {
  int num_nodes = 0;
  std::vector<MultiArc> arcs;
  std::vector<std::vector<int>> out;  // arc ids by tail
  std::vector<std::vector<int>> in;   // arc ids by head

  int add_arc(int from, int to, std::vector<std::int64_t> costs) {
    int id = static_cast<int>(arcs.size());
    arcs.push_back({from, to, std::move(costs), 0});
    out[from].push_back(id);
    in[to].push_back(id);
    return id;
  }
};

}  // namespace

FlowNetwork build_network(const Instance& inst, const FlowOptions& opt) {
  check_monge_precondition(inst, opt.monge_check);

  const int m = inst.num_items(), n = inst.num_positions(), p = inst.num_properties();

  std::vector<int> item_prop(m, -1);
  for (int ell = 0; ell < p; ++ell) {
    for (int item : inst.properties()[ell]) {
      if (item_prop[item] != -1)
        throw PreconditionError("item " + std::to_string(item + 1) + " belongs to properties " +
                                std::to_string(item_prop[item] + 1) + " and " +
                                std::to_string(ell + 1) +
                                "; this solver needs disjoint properties");
      item_prop[item] = ell;
    }
  }

  FlowNetwork net;
  net.n = n;
  net.scale = opt.scale;

  // Items with no property get a chain of their own with vacuous bounds.
  bool free_items = std::any_of(item_prop.begin(), item_prop.end(),
                                [](int ell) { return ell == -1; });
  net.num_chains = p + (free_items ? 1 : 0);
  net.num_nodes = (n + 1) * net.num_chains + n + 2;

  net.chain_items.assign(net.num_chains, {});
  for (int ell = 0; ell < p; ++ell) {
    const auto& prop = inst.properties()[ell];
    int take = std::min<int>(n, static_cast<int>(prop.size()));
    net.chain_items[ell].assign(prop.begin(), prop.begin() + take);
  }
  if (free_items) {
    auto& chain = net.chain_items[p];
    for (int item = 0; item < m && static_cast<int>(chain.size()) < n; ++item)
      if (item_prop[item] == -1) chain.push_back(item);
  }

  const double scale = static_cast<double>(opt.scale);
  std::int64_t max_scaled = std::llround(inst.max_weight() * scale);
  net.big_m = 1 + static_cast<std::int64_t>(n) * (max_scaled + 1);
  // Every s-t path accumulates at most one -M plus n weight terms; n of them must
  // stay clear of the int64 range with room for Dijkstra sums.
  if (net.big_m > kInf / (4 * (n + 1)))
    throw BudgetError("scaled costs overflow 64-bit arithmetic; lower the scale factor");

  auto scaled_weight = [&](int item, int k) {  // k is a 1-based position
    return k > n ? std::int64_t{0} : std::llround(inst.weight(item, k - 1) * scale);
  };

  net.layers.assign(net.num_chains, {});
  for (int chain = 0; chain < net.num_chains; ++chain) {
    const auto& items = net.chain_items[chain];
    const int s_count = static_cast<int>(items.size());
    net.layers[chain].resize(n);
    for (int k = 1; k <= n; ++k) {
      FlowNetwork::Layer& layer = net.layers[chain][k - 1];
      int upper = chain < p ? inst.upper(k, chain) : k;
      layer.mandatory = chain < p ? inst.lower(k, chain) : 0;
      net.sum_lower += layer.mandatory;
      int arcs = std::min(upper, s_count);
      layer.unit_costs.reserve(arcs);
      for (int r = 0; r < arcs; ++r) {
        std::int64_t cost = scaled_weight(items[r], k + 1) - scaled_weight(items[r], k);
        if (r < layer.mandatory) cost -= net.big_m;
        layer.unit_costs.push_back(cost);
      }
      // The exchange conditions sort these ascending already; rounding can nudge
      // neighbours by one, so enforce the order the residual logic relies on.
      std::sort(layer.unit_costs.begin(), layer.unit_costs.end());
    }
  }
  return net;
}

FlowResult solve_flow(const Instance& inst, const FlowOptions& opt) {
  FlowNetwork net = build_network(inst, opt);
  const int n = net.n;

  Graph g;
  g.num_nodes = net.num_nodes;
  g.out.resize(g.num_nodes);
  g.in.resize(g.num_nodes);

  std::vector<int> entry_arc(net.num_chains, -1);
  std::vector<std::vector<int>> layer_arc(net.num_chains, std::vector<int>(n + 1, -1));
  std::vector<std::vector<int>> exit_arc(net.num_chains, std::vector<int>(n + 1, -1));
  for (int chain = 0; chain < net.num_chains; ++chain) {
    int s_count = static_cast<int>(net.chain_items[chain].size());
    if (s_count > 0)
      entry_arc[chain] = g.add_arc(net.source(), net.rho(chain, n),
                                   std::vector<std::int64_t>(s_count, 0));
    for (int k = 1; k <= n; ++k) {
      const auto& layer = net.layers[chain][k - 1];
      if (!layer.unit_costs.empty())
        layer_arc[chain][k] = g.add_arc(net.rho(chain, k), net.rho(chain, k - 1),
                                        layer.unit_costs);
      exit_arc[chain][k] = g.add_arc(net.rho(chain, k - 1), net.gamma(k), {0});
    }
  }
  for (int k = 1; k <= n; ++k) g.add_arc(net.gamma(k), net.sink(), {0});

  // Initial potentials: the network is acyclic, so one relaxation sweep in
  // topological order (source, chains top-down, each gamma after the chain level
  // feeding it, sink last) prices every node despite the negative -M arcs.
  std::vector<int> topo;
  topo.reserve(g.num_nodes);
  topo.push_back(net.source());
  for (int k = n; k >= 0; --k) {
    for (int chain = 0; chain < net.num_chains; ++chain) topo.push_back(net.rho(chain, k));
    if (k + 1 <= n) topo.push_back(net.gamma(k + 1));
  }
  topo.push_back(net.sink());

  std::vector<std::int64_t> dist(g.num_nodes, kInf);
  dist[net.source()] = 0;
  for (int u : topo) {
    if (dist[u] >= kInf) continue;
    for (int id : g.out[u]) {
      const MultiArc& arc = g.arcs[id];
      if (arc.forward_open())
        dist[arc.to] = std::min(dist[arc.to], dist[u] + arc.forward_cost());
    }
  }

  FlowResult result;
  result.big_m = net.big_m;
  result.sum_lower = net.sum_lower;

  if (dist[net.sink()] >= kInf) {
    result.feasible = false;  // not even one unit fits
    return result;
  }

  // Shortest-path distances price the reachable nodes. Unreachable ones (chain
  // tails below a zero-capacity layer) keep the kInf sentinel: no open arc leads
  // into them, every arc out of them has cost 0, and they stay unreachable, so
  // the large potential never meets a negative reduced cost.
  std::vector<std::int64_t> pot(dist);

  auto verify_reduced_costs = [&]() {
    for (const MultiArc& arc : g.arcs) {
      if (arc.forward_open() && arc.forward_cost() + pot[arc.from] - pot[arc.to] < 0)
        throw std::logic_error("negative reduced cost on a forward arc");
      if (arc.backward_open() && arc.backward_cost() + pot[arc.to] - pot[arc.from] < 0)
        throw std::logic_error("negative reduced cost on a backward arc");
    }
  };
  auto verify_conservation = [&](int pushed) {
    std::vector<std::int64_t> balance(g.num_nodes, 0);
    for (const MultiArc& arc : g.arcs) {
      if (arc.flow < 0 || arc.flow > arc.capacity())
        throw std::logic_error("arc flow outside its capacity");
      balance[arc.from] -= arc.flow;
      balance[arc.to] += arc.flow;
    }
    for (int v = 0; v < g.num_nodes; ++v) {
      std::int64_t expect = v == net.source() ? -pushed : v == net.sink() ? pushed : 0;
      if (balance[v] != expect) throw std::logic_error("flow conservation violated");
    }
  };

  // n augmentations of one unit each (every path ends on a unit arc into the sink).
  std::vector<std::int64_t> d(g.num_nodes);
  std::vector<std::pair<int, bool>> parent(g.num_nodes);  // arc id, forward?
  using Item = std::pair<std::int64_t, int>;
  for (int round = 0; round < n; ++round) {
    if (opt.verify) verify_reduced_costs();

    std::fill(d.begin(), d.end(), kInf);
    std::fill(parent.begin(), parent.end(), std::pair(-1, false));
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    d[net.source()] = 0;
    pq.push({0, net.source()});
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (du != d[u]) continue;
      for (int id : g.out[u]) {
        const MultiArc& arc = g.arcs[id];
        if (!arc.forward_open()) continue;
        std::int64_t nd = du + arc.forward_cost() + pot[u] - pot[arc.to];
        if (nd < d[arc.to]) {
          d[arc.to] = nd;
          parent[arc.to] = {id, true};
          pq.push({nd, arc.to});
        }
      }
      for (int id : g.in[u]) {
        const MultiArc& arc = g.arcs[id];
        if (!arc.backward_open()) continue;
        std::int64_t nd = du + arc.backward_cost() + pot[u] - pot[arc.from];
        if (nd < d[arc.from]) {
          d[arc.from] = nd;
          parent[arc.from] = {id, false};
          pq.push({nd, arc.from});
        }
      }
    }

    if (d[net.sink()] >= kInf) {
      result.feasible = false;  // max flow < n: fewer than n placements fit the bounds
      result.augmentations = round;
      return result;
    }

    for (int v = net.sink(); v != net.source();) {
      auto [id, forward] = parent[v];
      MultiArc& arc = g.arcs[id];
      if (forward) {
        ++arc.flow;
        v = arc.from;
      } else {
        --arc.flow;
        v = arc.to;
      }
    }
    ++result.augmentations;
    for (int v = 0; v < g.num_nodes; ++v)
      pot[v] += std::min(d[v], d[net.sink()]);

    if (opt.verify) verify_conservation(result.augmentations);
  }

  // Units fill each layer cheapest-first, so the mandatory (-M) arcs are in use
  // exactly when the layer carries at least L units.
  for (int chain = 0; chain < net.num_chains; ++chain) {
    for (int k = 1; k <= n; ++k) {
      const auto& layer = net.layers[chain][k - 1];
      if (layer.mandatory == 0) continue;
      int id = layer_arc[chain][k];
      int used = id == -1 ? 0 : g.arcs[id].flow;
      if (used < layer.mandatory) {
        result.feasible = false;
        return result;
      }
    }
  }

  for (const MultiArc& arc : g.arcs)
    for (int r = 0; r < arc.flow; ++r) result.total_cost += arc.unit_costs[r];

  // A chain with c units sends its c best items to its exit positions in order;
  // that turns the anonymous units back into a concrete ranking.
  std::vector<int> out(n, -1);
  for (int chain = 0; chain < net.num_chains; ++chain) {
    int next = 0;
    for (int k = 1; k <= n; ++k) {
      int id = exit_arc[chain][k];
      if (id != -1 && g.arcs[id].flow == 1) out[k - 1] = net.chain_items[chain][next++];
    }
  }

  result.feasible = true;
  result.ranking = Ranking{std::move(out)};
  result.value = ranking_value(inst, result.ranking);
  // Every mandatory arc carries flow at this point, so adding M per lower-bound
  // unit cancels the rebates and negating recovers the maximized weight.
  result.cost_identity_value =
      -(static_cast<double>(result.total_cost) +
        static_cast<double>(net.big_m) * static_cast<double>(net.sum_lower)) /
      static_cast<double>(net.scale);
  return result;
}

}  // namespace fairrank
