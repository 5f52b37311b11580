#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairrank/error.hpp"
#include "fairrank/matrix.hpp"
#include "fairrank/metrics.hpp"

namespace fairrank {

// Where W comes from: a dense matrix or a metric recipe evaluated on demand.
// Metric-backed sources never materialize the full matrix, which keeps very large
// instances (millions of items) cheap to carry around.
class WeightSource {
 public:
  WeightSource() = default;
  static WeightSource from_matrix(Matrix w);
  static WeightSource from_metric(MetricSpec spec);

  bool is_explicit() const { return spec_.kind == MetricKind::explicit_matrix; }
  MetricKind kind() const { return spec_.kind; }
  const MetricSpec& metric() const { return spec_; }
  const Matrix& matrix() const { return matrix_; }

  friend bool operator==(const WeightSource&, const WeightSource&) = default;

 private:
  MetricSpec spec_{MetricKind::explicit_matrix, {}, {}};
  Matrix matrix_;
};

// Raw, unvalidated instance description. Items and properties are 0-based;
// k is a prefix length in 1..n. File formats are 1-based, converted at the
// I/O boundary.
struct InstanceSpec {
  int m = 0;  // items
  int n = 0;  // positions, n <= m
  std::vector<std::vector<int>> properties;

  struct Bound {
    int k = 0;      // prefix length, 1..n
    int ell = 0;    // property, 0-based
    int value = 0;

    friend bool operator==(const Bound&, const Bound&) = default;
  };
  std::vector<Bound> lower;  // defaults to 0 where unspecified
  std::vector<Bound> upper;  // defaults to k where unspecified

  WeightSource weights;
};

// positions_to_item: entry j is the item placed at position j (both 0-based).
struct Ranking {
  std::vector<int> items;

  int size() const { return static_cast<int>(items.size()); }
  int operator[](int pos) const { return items[pos]; }

  friend bool operator==(const Ranking&, const Ranking&) = default;
};

// Validated instance. Prefix bounds are stored dense (n x p) with defaults filled
// in; both bound families are non-decreasing in k and satisfy 0 <= L <= U <= k.
class Instance {
 public:
  int num_items() const { return m_; }
  int num_positions() const { return n_; }
  int num_properties() const { return p_; }

  // Sorted ascending, duplicates removed.
  const std::vector<std::vector<int>>& properties() const { return properties_; }

  int lower(int k, int ell) const { return lower_[idx(k, ell)]; }  // k in 1..n
  int upper(int k, int ell) const { return upper_[idx(k, ell)]; }
  bool has_lower_bounds() const { return has_lower_; }

  const WeightSource& weights() const { return weights_; }
  double weight(int item, int pos) const {
    return weights_.is_explicit() ? weights_.matrix()(item, pos)
                                  : metric_weight(weights_.metric(), m_, item, pos);
  }
  double max_weight() const { return max_weight_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  friend std::optional<Instance> try_validate_instance(const InstanceSpec&,
                                                       std::vector<std::string>*);
  std::size_t idx(int k, int ell) const {
    return static_cast<std::size_t>(k - 1) * p_ + ell;
  }

  int m_ = 0, n_ = 0, p_ = 0;
  std::vector<std::vector<int>> properties_;
  std::vector<int> lower_, upper_;  // dense n x p, k-major
  bool has_lower_ = false;
  WeightSource weights_;
  double max_weight_ = 0.0;
};

// Normalizes and checks a description. All problems are collected; the throwing
// variant raises ValidationError carrying the full list. Validation is idempotent:
// validating to_spec(instance) reproduces the instance exactly.
Instance validate_instance(const InstanceSpec& spec);
std::optional<Instance> try_validate_instance(const InstanceSpec& spec,
                                              std::vector<std::string>* errors);
InstanceSpec to_spec(const Instance& inst);

// Sum of W[items[j]][j]. Throws ValidationError on wrong length, out-of-range or
// repeated items.
double ranking_value(const Instance& inst, const Ranking& r);

struct ConstraintEntry {
  int k = 0;    // prefix length, 1..n
  int ell = 0;  // property, 0-based
  int count = 0;
  int lower = 0, upper = 0;
  int slack = 0;    // max(0, upper - count)
  int deficit = 0;  // max(0, lower - count)
  double factor = 1.0;  // max(1, count/upper); +inf when upper == 0 < count
};

struct ConstraintReport {
  std::vector<ConstraintEntry> entries;  // all (k, ell), k-major
  bool feasible = true;                  // all factors 1 and deficits 0
  double max_violation_factor = 1.0;
};

ConstraintReport check_constraints(const Instance& inst, const Ranking& r);

// Items grouped by the exact set of properties they belong to.
struct TypeProfile {
  std::vector<std::vector<int>> item_types;    // per item, sorted property ids
  std::vector<std::vector<int>> type_vectors;  // distinct types, lexicographic
  std::vector<std::vector<int>> classes;       // items per type, ascending
  int delta = 0;                               // max |T_i|

  int num_types() const { return static_cast<int>(type_vectors.size()); }
};

TypeProfile type_profile(const Instance& inst);

}  // namespace fairrank
