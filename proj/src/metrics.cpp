#include "fairrank/metrics.hpp"

#include <cmath>
#include <sstream>
#include <tuple>

#include "fairrank/error.hpp"

namespace fairrank {

const char* metric_kind_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::explicit_matrix: return "explicit";
    case MetricKind::rank1: return "rank1";
    case MetricKind::dcg: return "dcg";
    case MetricKind::bradley_terry: return "bradley_terry";
    case MetricKind::footrule: return "footrule";
    case MetricKind::rho: return "rho";
  }
  return "?";
}

bool parse_metric_kind(const std::string& name, MetricKind* out) {
  for (MetricKind k : {MetricKind::explicit_matrix, MetricKind::rank1, MetricKind::dcg,
                       MetricKind::bradley_terry, MetricKind::footrule, MetricKind::rho}) {
    if (name == metric_kind_name(k)) {
      *out = k;
      return true;
    }
  }
  return false;
}

std::vector<std::string> metric_spec_errors(const MetricSpec& spec, int m, int n) {
  std::vector<std::string> errors;
  auto fail = [&errors](const std::string& msg) { errors.push_back(msg); };

  const bool needs_qualities = spec.kind == MetricKind::rank1 || spec.kind == MetricKind::dcg ||
                               spec.kind == MetricKind::bradley_terry;
  if (spec.kind == MetricKind::explicit_matrix) {
    fail("explicit weights carry no metric spec");
    return errors;
  }

  const bool has_qualities = !spec.qualities.empty();
  if ((needs_qualities || has_qualities) && static_cast<int>(spec.qualities.size()) != m) {
    std::ostringstream os;
    os << "qualities length " << spec.qualities.size() << " does not match m=" << m;
    fail(os.str());
  }
  // footrule/rho read only positions; qualities are optional but checked if present.
  if (!spec.qualities.empty() && static_cast<int>(spec.qualities.size()) == m) {
    for (int i = 0; i < m; ++i) {
      double a = spec.qualities[i];
      if (!std::isfinite(a) || a < 0.0) {
        fail("quality " + std::to_string(i + 1) + " is negative or non-finite");
        break;
      }
    }
    for (int i = 0; i + 1 < m; ++i) {
      if (spec.qualities[i] < spec.qualities[i + 1]) {
        fail("qualities are not sorted non-increasing (position " + std::to_string(i + 2) + ")");
        break;
      }
    }
    if (spec.kind == MetricKind::bradley_terry) {
      for (int i = 0; i < m; ++i) {
        if (spec.qualities[i] < 1.0) {
          fail("bradley_terry requires all qualities >= 1 (quality " + std::to_string(i + 1) +
               " is smaller)");
          break;
        }
      }
    }
  }

  if (spec.kind == MetricKind::rank1) {
    if (static_cast<int>(spec.discount.size()) != n) {
      std::ostringstream os;
      os << "discount length " << spec.discount.size() << " does not match n=" << n;
      fail(os.str());
    } else {
      for (int j = 0; j < n; ++j) {
        if (!std::isfinite(spec.discount[j]) || spec.discount[j] <= 0.0) {
          fail("discount " + std::to_string(j + 1) + " is not positive");
          break;
        }
      }
      for (int j = 0; j + 1 < n; ++j) {
        if (spec.discount[j] < spec.discount[j + 1]) {
          fail("discount table is not sorted non-increasing (position " + std::to_string(j + 2) +
               ")");
          break;
        }
      }
    }
  } else if (!spec.discount.empty()) {
    fail("discount table is only meaningful for rank1 weights");
  }

  return errors;
}

double metric_weight(const MetricSpec& spec, int m, int item, int pos) {
  const double i = item + 1;  // formulas below are 1-based
  const double j = pos + 1;
  switch (spec.kind) {
    case MetricKind::rank1:
      return spec.qualities[item] * spec.discount[pos];
    case MetricKind::dcg:
      return spec.qualities[item] / std::log2(j + 1.0);
    case MetricKind::bradley_terry:
      return (m - j) * std::log(spec.qualities[item]);
    case MetricKind::footrule:
      return (2.0 * m - i - j) - std::abs(j - i);
    case MetricKind::rho: {
      double u = 2.0 * m - i - j;
      double v = j - i;
      return u * u - v * v;
    }
    case MetricKind::explicit_matrix:
      break;
  }
  return 0.0;
}

Matrix gen_weights(const MetricSpec& spec, int m, int n) {
  auto errors = metric_spec_errors(spec, m, n);
  if (!errors.empty()) throw ValidationError(errors);
  Matrix w(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = metric_weight(spec, m, i, j);
  return w;
}

std::string MongeWitness::describe() const {
  if (holds) return "all conditions hold";
  std::ostringstream os;
  switch (condition) {
    case MongeCondition::row_monotone:
      os << "W increases along row " << i1 + 1 << " between columns " << j1 + 1 << " and "
         << j2 + 1;
      break;
    case MongeCondition::col_monotone:
      os << "W increases down column " << j1 + 1 << " between rows " << i1 + 1 << " and "
         << i2 + 1;
      break;
    case MongeCondition::exchange:
      os << "exchange inequality fails on rows (" << i1 + 1 << "," << i2 + 1 << "), columns ("
         << j1 + 1 << "," << j2 + 1 << ")";
      break;
  }
  return os.str();
}

namespace {

// Fills the index pair a monotonicity condition does not read, so every witness is
// a well-formed quadruple whenever the matrix admits one.
MongeWitness column_rise_witness(int i1, int i2, int j, int n) {
  MongeWitness wit;
  wit.holds = false;
  wit.condition = MongeCondition::col_monotone;
  wit.i1 = i1;
  wit.i2 = i2;
  wit.j1 = j;
  wit.j2 = j + 1 < n ? j + 1 : j;  // context only; the condition reads j1
  return wit;
}

MongeWitness row_rise_witness(int i, int j1, int j2, int m) {
  MongeWitness wit;
  wit.holds = false;
  wit.condition = MongeCondition::row_monotone;
  wit.i1 = i;
  wit.i2 = i + 1 < m ? i + 1 : i;
  wit.j1 = j1;
  wit.j2 = j2;
  return wit;
}

template <typename Cmp>
MongeWitness check_adjacent(const Matrix& w, Cmp violated) {
  const int m = w.rows(), n = w.cols();
  for (int i = 0; i + 1 < m; ++i)
    for (int j = 0; j < n; ++j)
      if (violated(w(i, j), w(i + 1, j))) return column_rise_witness(i, i + 1, j, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j + 1 < n; ++j)
      if (violated(w(i, j), w(i, j + 1))) return row_rise_witness(i, j, j + 1, m);
  for (int i = 0; i + 1 < m; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      if (violated(w(i, j) + w(i + 1, j + 1), w(i, j + 1) + w(i + 1, j))) {
        MongeWitness wit;
        wit.holds = false;
        wit.condition = MongeCondition::exchange;
        wit.i1 = i;
        wit.i2 = i + 1;
        wit.j1 = j;
        wit.j2 = j + 1;
        return wit;
      }
    }
  }
  return MongeWitness{};
}

}  // namespace

MongeWitness check_monge(const Matrix& w) {
  return check_adjacent(w, [](double lhs, double rhs) { return lhs < rhs; });
}

MongeWitness check_monge_strict(const Matrix& w) {
  return check_adjacent(w, [](double lhs, double rhs) { return lhs <= rhs; });
}

MongeWitness check_monge_exhaustive(const Matrix& w, bool parallel) {
  const int m = w.rows(), n = w.cols();
  // (condition, i1, i2, j1, j2) of the smallest violation found, or empty.
  struct Found {
    bool any = false;
    MongeWitness wit;
  };
  auto better = [](const MongeWitness& a, const MongeWitness& b) {
    auto key = [](const MongeWitness& x) {
      return std::tuple(static_cast<int>(x.condition), x.i1, x.i2, x.j1, x.j2);
    };
    return key(a) < key(b);
  };

  Found best;
#pragma omp parallel if (parallel)
  {
    Found local;
#pragma omp for collapse(2) schedule(static) nowait
    for (int i1 = 0; i1 < m; ++i1) {
      for (int j1 = 0; j1 < n; ++j1) {
        // Down column j1: every i2 > i1.
        for (int i2 = i1 + 1; i2 < m; ++i2) {
          if (w(i1, j1) < w(i2, j1)) {
            MongeWitness wit = column_rise_witness(i1, i2, j1, n);
            if (!local.any || better(wit, local.wit)) local = {true, wit};
            break;
          }
        }
        // Along row i1: every j2 > j1.
        for (int j2 = j1 + 1; j2 < n; ++j2) {
          if (w(i1, j1) < w(i1, j2)) {
            MongeWitness wit = row_rise_witness(i1, j1, j2, m);
            if (!local.any || better(wit, local.wit)) local = {true, wit};
            break;
          }
        }
        // Exchange over all quadruples anchored at (i1, j1).
        for (int i2 = i1 + 1; i2 < m; ++i2) {
          for (int j2 = j1 + 1; j2 < n; ++j2) {
            if (w(i1, j1) + w(i2, j2) < w(i1, j2) + w(i2, j1)) {
              MongeWitness wit;
              wit.holds = false;
              wit.condition = MongeCondition::exchange;
              wit.i1 = i1;
              wit.i2 = i2;
              wit.j1 = j1;
              wit.j2 = j2;
              if (!local.any || better(wit, local.wit)) local = {true, wit};
            }
          }
        }
      }
    }
#pragma omp critical(monge_exhaustive_merge)
    {
      if (local.any && (!best.any || better(local.wit, best.wit))) best = local;
    }
  }
  return best.any ? best.wit : MongeWitness{};
}

bool witness_violates(const Matrix& w, const MongeWitness& wit, bool strict) {
  if (wit.holds) return false;
  auto bad = [strict](double lhs, double rhs) { return strict ? lhs <= rhs : lhs < rhs; };
  switch (wit.condition) {
    case MongeCondition::row_monotone:
      return bad(w(wit.i1, wit.j1), w(wit.i1, wit.j2));
    case MongeCondition::col_monotone:
      return bad(w(wit.i1, wit.j1), w(wit.i2, wit.j1));
    case MongeCondition::exchange:
      return bad(w(wit.i1, wit.j1) + w(wit.i2, wit.j2), w(wit.i1, wit.j2) + w(wit.i2, wit.j1));
  }
  return false;
}

}  // namespace fairrank
