#include <doctest.h>

#include "fairrank/error.hpp"
#include "fairrank/generators.hpp"
#include "fairrank/oracle.hpp"
#include "helpers.hpp"

using namespace fairrank;
using namespace fairrank::testing;

TEST_CASE("canonical small instance: optimum 29 via ranking (1,3,2,4)") {
  Instance inst = gen_capped_pair();
  OracleResult r = brute_force_solve(inst);
  REQUIRE(r.feasible);
  CHECK(r.value == doctest::Approx(29.0));
  CHECK(r.ranking == Ranking{{0, 2, 1, 3}});
  // 24 orderings minus the 4 that put both property members into the top 2.
  CHECK(r.feasible_count == 20);
}

TEST_CASE("pruned search matches a plain unpruned enumeration") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenParams params;
    params.m = 6;
    params.n = 4;
    params.p = 2;
    params.delta = 2;
    params.theta = (seed % 2) ? 0.55 : 0.8;
    params.lower_rate = (seed % 3 == 0) ? 0.7 : 0.0;
    params.seed = seed;
    Instance inst = gen_random(params);

    OracleResult fast = brute_force_solve(inst);
    RefBest slow = ref_enumerate(inst);
    INFO("seed ", seed);
    CHECK(fast.feasible == slow.feasible);
    CHECK(fast.feasible_count == slow.feasible_count);
    if (slow.feasible) {
      CHECK(fast.value == doctest::Approx(slow.value).epsilon(1e-12));
      // Both sides keep the lexicographically smallest maximizer.
      CHECK(fast.ranking == slow.ranking);
    }
  }
}

TEST_CASE("single-thread and parallel runs are identical") {
  GenParams params;
  params.m = 8;
  params.n = 5;
  params.p = 3;
  params.delta = 2;
  params.theta = 0.6;
  params.lower_rate = 0.5;
  params.seed = 12;
  Instance inst = gen_random(params);

  OracleOptions one;
  one.threads = 1;
  OracleOptions many;
  many.threads = 4;
  OracleResult a = brute_force_solve(inst, one);
  OracleResult b = brute_force_solve(inst, many);
  CHECK(a.feasible == b.feasible);
  CHECK(a.value == b.value);  // bitwise: the merge preserves the serial result
  CHECK(a.ranking == b.ranking);
  CHECK(a.feasible_count == b.feasible_count);
}

TEST_CASE("infeasible instances are reported, not invented") {
  // One copy of the property demands both members in the top 2, the other caps
  // them at one: no ranking satisfies both.
  Instance hard =
      make_instance(3, 2, {{0, 1}, {0, 1}}, Matrix{{4, 3}, {3, 2}, {2, 1}},
                    {{1, 0, 0}, {2, 0, 1}}, {{2, 1, 2}});
  OracleResult r = brute_force_solve(hard);
  CHECK_FALSE(r.feasible);
  CHECK(r.feasible_count == 0);
  CHECK(ref_enumerate(hard).feasible == false);
}

TEST_CASE("assignment budget trips before the walk starts") {
  GenParams params;
  params.m = 40;
  params.n = 10;
  params.seed = 3;
  Instance inst = gen_random(params);
  OracleOptions opt;
  opt.max_assignments = 1e6;  // 40!/(30!) is far beyond this
  CHECK_THROWS_AS((void)brute_force_solve(inst, opt), BudgetError);
}
