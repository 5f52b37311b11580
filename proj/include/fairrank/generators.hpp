#pragma once

#include <cstdint>
#include <vector>

#include "fairrank/model.hpp"

namespace fairrank {

enum class QualityDist { uniform_real, small_int };

const char* quality_dist_name(QualityDist dist);
bool parse_quality_dist(const std::string& name, QualityDist* out);

// Seeded random instances. theta controls bound tightness: 1 leaves every upper
// bound at its default (unconstrained); below 1 sets U[k][ell] =
// ceil(theta * k * |P_ell| / m) for every prefix. lower_rate is the per-property
// chance of a lower bound: a random prefix k0 gets L = v for all k >= k0, with v
// capped so L <= U everywhere. Same seed, same parameters: byte-identical
// serialized instance.
struct GenParams {
  int m = 10;
  int n = 5;
  int p = 0;
  int delta = 0;  // max properties per item; >= 1 when p >= 1
  MetricKind metric = MetricKind::dcg;
  QualityDist quality_dist = QualityDist::uniform_real;
  double theta = 1.0;
  double lower_rate = 0.0;
  std::uint64_t seed = 0;
};

Instance gen_random(const GenParams& params);

// Encodes set-disjointness as ranking feasibility: one item per hyperedge, one
// property per vertex (P_ell collects the edges containing vertex ell), and
// U[k][ell] = 1 everywhere, so a feasible ranking of length n picks n pairwise
// disjoint hyperedges and vice versa. Weights are all-ones. Vertices touching no
// edge are dropped. Edges are 0-based vertex lists.
Instance gen_from_hypergraph(int num_vertices, const std::vector<std::vector<int>>& edges,
                             int n);

// Small canonical example: m = n = 4, one property {1, 2} (1-based) with
// U[2][1] = 1, everything else defaulted, W[i][j] = (5 - i) * (5 - j). The
// unconstrained optimum (identity, value 30) packs both property members into the
// top 2; the best admissible ranking swaps items 2 and 3 for value 29.
Instance gen_capped_pair();

}  // namespace fairrank
