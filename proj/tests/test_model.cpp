#include <doctest.h>

#include <cmath>

#include "fairrank/error.hpp"
#include "fairrank/generators.hpp"
#include "fairrank/model.hpp"
#include "helpers.hpp"

using namespace fairrank;
using namespace fairrank::testing;

namespace {

Matrix linear_w(int m, int n) {
  // W[i][j] = (m - i) + (n - j): additive, so the exchange condition holds with
  // equality everywhere.
  Matrix w(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = (m - i) + (n - j);
  return w;
}

}  // namespace

TEST_CASE("defaults fill unspecified bounds") {
  Instance inst = make_instance(4, 3, {{0, 1}}, linear_w(4, 3), {{2, 0, 1}});
  CHECK(inst.upper(1, 0) == 1);  // clamped to k, not to the k=2 entry
  CHECK(inst.upper(2, 0) == 1);
  CHECK(inst.upper(3, 0) == 3);
  CHECK(inst.lower(1, 0) == 0);
  CHECK(inst.lower(3, 0) == 0);
  CHECK_FALSE(inst.has_lower_bounds());
}

TEST_CASE("post-default decreases are rejected, not silently tightened") {
  InstanceSpec spec;
  spec.m = 4;
  spec.n = 3;
  spec.properties = {{0, 1}};
  spec.weights = WeightSource::from_matrix(linear_w(4, 3));
  // U at k=3 is 1, but k=2 is left at its default of 2.
  spec.upper = {{3, 0, 1}};
  std::vector<std::string> errors;
  CHECK_FALSE(try_validate_instance(spec, &errors).has_value());
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].find("decreas") != std::string::npos);
}

TEST_CASE("bound validation catches the whole error list at once") {
  InstanceSpec spec;
  spec.m = 3;
  spec.n = 2;
  spec.properties = {{0, 5}, {}};
  spec.upper = {{1, 0, 1}, {1, 0, 1}, {9, 0, 1}, {1, 3, 1}, {2, 0, -1}, {1, 1, 2}};
  spec.weights = WeightSource::from_matrix(linear_w(3, 2));
  std::vector<std::string> errors;
  CHECK_FALSE(try_validate_instance(spec, &errors).has_value());
  // out-of-range member, empty property, duplicate entry, k out of range,
  // property index out of range, negative value, value above k
  CHECK(errors.size() >= 6);
}

TEST_CASE("lower above upper is rejected") {
  InstanceSpec spec;
  spec.m = 4;
  spec.n = 3;
  spec.properties = {{0, 1, 2}};
  spec.upper = {{2, 0, 1}, {3, 0, 1}};
  spec.lower = {{2, 0, 2}, {3, 0, 2}};
  spec.weights = WeightSource::from_matrix(linear_w(4, 3));
  CHECK_THROWS_AS((void)validate_instance(spec), ValidationError);
}

TEST_CASE("n above m is rejected") {
  InstanceSpec spec;
  spec.m = 2;
  spec.n = 3;
  spec.properties = {};
  spec.weights = WeightSource::from_matrix(linear_w(2, 3));
  CHECK_THROWS_AS((void)validate_instance(spec), ValidationError);
}

TEST_CASE("explicit weights must be finite, non-negative, and sized m x n") {
  InstanceSpec spec;
  spec.m = 2;
  spec.n = 2;
  spec.weights = WeightSource::from_matrix(Matrix{{1.0, 2.0}});
  CHECK_THROWS_AS((void)validate_instance(spec), ValidationError);

  spec.weights = WeightSource::from_matrix(Matrix{{1.0, -2.0}, {0.5, 0.25}});
  CHECK_THROWS_AS((void)validate_instance(spec), ValidationError);
}

TEST_CASE("to_spec round trip reproduces the instance") {
  Instance inst = make_instance(5, 3, {{0, 1}, {2, 3, 4}}, linear_w(5, 3),
                                {{2, 0, 1}, {3, 0, 1}}, {{3, 1, 1}});
  Instance again = validate_instance(to_spec(inst));
  CHECK(inst == again);
  // Canonical: only non-default entries survive.
  InstanceSpec spec = to_spec(inst);
  CHECK(spec.upper.size() == 2);
  CHECK(spec.lower.size() == 1);
}

TEST_CASE("ranking_value sums the placed cells") {
  Matrix w{{9, 8}, {6, 5}, {3, 2}};
  Instance inst = make_instance(3, 2, {}, w);
  CHECK(ranking_value(inst, Ranking{{0, 1}}) == doctest::Approx(14.0));
  CHECK(ranking_value(inst, Ranking{{2, 0}}) == doctest::Approx(11.0));
  CHECK_THROWS_AS((void)ranking_value(inst, Ranking{{0}}), ValidationError);
  CHECK_THROWS_AS((void)ranking_value(inst, Ranking{{0, 0}}), ValidationError);
  CHECK_THROWS_AS((void)ranking_value(inst, Ranking{{0, 3}}), ValidationError);
}

TEST_CASE("check_constraints reports counts, slack, and violation factors") {
  Instance inst = gen_capped_pair();
  // Identity packs both property members into the top 2.
  ConstraintReport bad = check_constraints(inst, Ranking{{0, 1, 2, 3}});
  CHECK_FALSE(bad.feasible);
  CHECK(bad.max_violation_factor == doctest::Approx(2.0));
  bool found = false;
  for (const auto& e : bad.entries) {
    if (e.k == 2 && e.ell == 0) {
      found = true;
      CHECK(e.count == 2);
      CHECK(e.upper == 1);
      CHECK(e.factor == doctest::Approx(2.0));
    }
    CHECK(e.deficit == 0);
  }
  CHECK(found);

  ConstraintReport good = check_constraints(inst, Ranking{{0, 2, 1, 3}});
  CHECK(good.feasible);
  CHECK(good.max_violation_factor == doctest::Approx(1.0));
}

TEST_CASE("deficits show up when lower bounds are missed") {
  Instance inst = make_instance(4, 2, {{2, 3}}, linear_w(4, 2), {}, {{2, 0, 1}});
  ConstraintReport r = check_constraints(inst, Ranking{{0, 1}});
  CHECK_FALSE(r.feasible);
  bool found = false;
  for (const auto& e : r.entries)
    if (e.k == 2 && e.ell == 0) {
      found = true;
      CHECK(e.deficit == 1);
    }
  CHECK(found);
}

TEST_CASE("zero upper bound with members present is an infinite factor") {
  Instance inst = make_instance(3, 2, {{0}}, linear_w(3, 2), {{1, 0, 0}, {2, 0, 0}});
  ConstraintReport r = check_constraints(inst, Ranking{{0, 1}});
  CHECK_FALSE(r.feasible);
  CHECK(std::isinf(r.max_violation_factor));
}

TEST_CASE("type profile groups items by property set") {
  Instance inst = make_instance(5, 3, {{0, 1, 3}, {1, 2}}, linear_w(5, 3));
  TypeProfile tp = type_profile(inst);
  CHECK(tp.delta == 2);
  CHECK(tp.num_types() == 4);  // {}, {0}, {0,1}, {1}
  CHECK(tp.item_types[1] == std::vector<int>{0, 1});
  CHECK(tp.item_types[4].empty());
  // Lexicographic type order with ascending members inside each class.
  CHECK(tp.type_vectors[0].empty());
  CHECK(tp.classes[0] == std::vector<int>{4});
  CHECK(tp.type_vectors[1] == std::vector<int>{0});
  CHECK(tp.classes[1] == std::vector<int>{0, 3});
  CHECK(tp.type_vectors[2] == std::vector<int>{0, 1});
  CHECK(tp.classes[2] == std::vector<int>{1});
  CHECK(tp.type_vectors[3] == std::vector<int>{1});
  CHECK(tp.classes[3] == std::vector<int>{2});
}

TEST_CASE("metric-backed instances never materialize the matrix") {
  MetricSpec spec;
  spec.kind = MetricKind::dcg;
  spec.qualities = {4, 3, 2, 1};
  Instance inst = make_metric_instance(4, 3, {}, spec);
  CHECK(inst.weights().matrix().empty());
  CHECK(inst.weight(0, 0) == doctest::Approx(4.0));
  CHECK(inst.max_weight() == doctest::Approx(4.0));
}
