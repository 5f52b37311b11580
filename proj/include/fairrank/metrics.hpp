#pragma once

#include <string>
#include <vector>

#include "fairrank/matrix.hpp"

namespace fairrank {

// Weight recipes of the form W[i][j] = a_i * f(j) plus two displacement-based kinds.
// All of them produce matrices that are non-increasing along rows and columns and
// satisfy the exchange inequality
//     W[i1][j1] + W[i2][j2] >= W[i1][j2] + W[i2][j1]   for i1 < i2, j1 < j2,
// provided the qualities are sorted non-increasing.
enum class MetricKind {
  explicit_matrix,  // weights given directly, no recipe
  rank1,            // a_i * f(j) with a user-supplied discount table f
  dcg,              // a_i / log2(j + 1)
  bradley_terry,    // (m - j) * ln(a_i), requires a_i >= 1
  footrule,         // (2m - i - j) - |j - i|
  rho,              // (2m - i - j)^2 - (j - i)^2
};

const char* metric_kind_name(MetricKind kind);
bool parse_metric_kind(const std::string& name, MetricKind* out);

struct MetricSpec {
  MetricKind kind = MetricKind::dcg;
  std::vector<double> qualities;  // per item, non-increasing; unused by footrule/rho
  std::vector<double> discount;   // rank1 only: per position, positive non-increasing

  friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

// Empty when the metric is usable for an m x n instance.
std::vector<std::string> metric_spec_errors(const MetricSpec& spec, int m, int n);

// Single entry, 0-based item/pos. Callers validate with metric_spec_errors first.
double metric_weight(const MetricSpec& spec, int m, int item, int pos);

// Materializes the full m x n matrix. Throws ValidationError on a bad spec.
Matrix gen_weights(const MetricSpec& spec, int m, int n);

enum class MongeCondition { row_monotone, col_monotone, exchange };

// Counterexample for a failed check: the quadruple (i1 < i2, j1 < j2) and which of
// the three conditions it breaks. Monotonicity conditions only read one row or
// column of the quadruple; the other index pair is filled in for context when the
// matrix has one, and collapses to the violating index on single-row/column input.
struct MongeWitness {
  bool holds = true;
  int i1 = -1, i2 = -1, j1 = -1, j2 = -1;  // 0-based
  MongeCondition condition = MongeCondition::exchange;
  std::string describe() const;  // 1-based, human readable
};

// O(mn) adjacent-pair check. Adjacent exchange inequalities telescope to the full
// quadruple condition, so this is equivalent to the exhaustive check.
MongeWitness check_monge(const Matrix& w);

// Same conditions with strict inequalities; separates tie-free matrices from ones
// with plateaus (the all-equal matrix is non-strict).
MongeWitness check_monge_strict(const Matrix& w);

// Direct O(m^2 n^2) enumeration of every quadruple plus every monotone pair.
// Reference for the adjacent-pair reduction; parallelized, deterministic witness
// (lexicographically smallest violation).
MongeWitness check_monge_exhaustive(const Matrix& w, bool parallel = true);

// Re-evaluates a witness against the matrix; true when it genuinely violates the
// claimed condition (strict variant checks the strict form).
bool witness_violates(const Matrix& w, const MongeWitness& wit, bool strict = false);

}  // namespace fairrank
