#pragma once

#include <cstdint>
#include <vector>

#include "fairrank/greedy.hpp"  // MongeCheckMode
#include "fairrank/model.hpp"

namespace fairrank {

struct FlowOptions {
  std::int64_t scale = std::int64_t{1} << 20;  // fixed-point factor for costs
  bool verify = false;  // re-check reduced costs / conservation at every step
  MongeCheckMode monge_check = MongeCheckMode::automatic;
};

// Layered min-cost-flow encoding for disjoint properties with lower and upper
// bounds. One chain of nodes rho[l][n..0] per property (plus one for items with no
// property); position nodes gamma[1..n] feed the sink.
//
//   source -> rho[l][n]        capacity = #items kept for the chain, cost 0
//   rho[l][k] -> rho[l][k-1]   min(U[k][l], #items) unit arcs; the r-th costs
//                              W[i_r][k+1] - W[i_r][k]  (W[.][n+1] = 0), and the
//                              L[k][l] cheapest get an extra -M so any solution
//                              must use them
//   rho[l][k-1] -> gamma[k]    unit, cost 0
//   gamma[k] -> sink           unit, cost 0
//
// A unit that leaves chain l at gamma[k] has picked up -W[i][k] in telescoped
// cost, so a value-n flow of minimum cost is a maximum-value ranking and
// value = M * sum(L) - cost. Flow through layer (l,k) is the number of chain-l
// items ranked in the top k, which the arc multiplicities cap at U and the -M
// arcs push up to L.
//
// Parallel arcs of a layer are stored as one object with a sorted cost list;
// residual logic treats unit f+1 as available at costs[f].
struct FlowNetwork {
  int n = 0;
  int num_chains = 0;        // properties plus the no-property chain if needed
  int num_nodes = 0;         // (n+1) * num_chains + n + 2
  std::int64_t scale = 0;
  std::int64_t big_m = 0;    // 1 + n * (max scaled weight + 1)
  std::int64_t sum_lower = 0;

  struct Layer {
    std::vector<std::int64_t> unit_costs;  // ascending; first `mandatory` carry -M
    int mandatory = 0;
  };
  std::vector<std::vector<Layer>> layers;       // [chain][k-1]
  std::vector<std::vector<int>> chain_items;    // items per chain, best first

  int source() const { return 0; }
  int sink() const { return 1; }
  int gamma(int k) const { return 2 + (k - 1); }               // k in 1..n
  int rho(int chain, int k) const { return 2 + n + chain * (n + 1) + k; }  // k in 0..n
};

// Builds the network; throws PreconditionError on overlapping properties or a
// failed weight-condition check, BudgetError when scaled costs could overflow.
FlowNetwork build_network(const Instance& inst, const FlowOptions& opt = {});

struct FlowResult {
  bool feasible = false;
  Ranking ranking;
  double value = 0.0;            // priced directly from the ranking, no rounding
  std::int64_t total_cost = 0;   // scaled, includes -M rebates
  std::int64_t big_m = 0;
  std::int64_t sum_lower = 0;
  double cost_identity_value = 0.0;  // -(total_cost + big_m * sum_lower) / scale
  int augmentations = 0;
};

// Successive shortest augmenting paths with node potentials: one pass in
// topological order prices the initial (acyclic) network, then n rounds of
// Dijkstra on reduced costs. Infeasible when fewer than n units fit or some
// mandatory arc stays empty.
FlowResult solve_flow(const Instance& inst, const FlowOptions& opt = {});

}  // namespace fairrank
