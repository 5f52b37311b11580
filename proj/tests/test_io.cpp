#include <doctest.h>

#include <fstream>
#include <string>

#include <json.hpp>

#include "fairrank/error.hpp"
#include "fairrank/generators.hpp"
#include "fairrank/io.hpp"

#include "helpers.hpp"

using namespace fairrank;
using namespace fairrank::testing;
using nlohmann::json;

namespace {

json parse(const std::string& text) { return json::parse(text); }

const char* kMixedInstance = R"({
  "m": 4, "n": 3,
  "properties": [[1, 3], [2, 4]],
  "lower": [{"k": 3, "l": 2, "value": 1}],
  "upper": [{"k": 2, "l": 1, "value": 1}],
  "weights": {"kind": "explicit",
              "matrix": [[9, 8, 7], [8, 7, 6], [7, 6, 5], [6, 5, 4]]}
})";

}  // namespace

TEST_CASE("file indices are 1-based, internal ones 0-based") {
  Instance inst = instance_from_json(parse(kMixedInstance));
  CHECK(inst.num_items() == 4);
  CHECK(inst.num_positions() == 3);
  CHECK(inst.properties()[0] == std::vector<int>{0, 2});
  CHECK(inst.properties()[1] == std::vector<int>{1, 3});
  CHECK(inst.upper(2, 0) == 1);
  CHECK(inst.lower(3, 1) == 1);
  CHECK(inst.weight(3, 2) == 4.0);
}

TEST_CASE("parse of serialize is the identity") {
  Instance inst = instance_from_json(parse(kMixedInstance));
  const std::string text = serialize_instance(inst);
  Instance again = instance_from_json(parse(text));
  CHECK(again == inst);
  CHECK(serialize_instance(again) == text);

  GenParams params;
  params.m = 9;
  params.n = 4;
  params.p = 3;
  params.delta = 2;
  params.metric = MetricKind::rank1;
  params.theta = 0.5;
  params.lower_rate = 0.6;
  params.seed = 321;
  Instance metric_backed = gen_random(params);
  Instance back = instance_from_json(parse(serialize_instance(metric_backed)));
  CHECK(back == metric_backed);
}

TEST_CASE("serialization drops defaulted bounds and sorts the rest") {
  // U(3, 1) = 3 equals its default; the survivors come out sorted by (l, k)
  // regardless of input order.
  json j = parse(R"({
    "m": 5, "n": 3,
    "properties": [[1, 2], [3, 4, 5]],
    "upper": [{"k": 3, "l": 1, "value": 3},
              {"k": 2, "l": 2, "value": 1},
              {"k": 1, "l": 2, "value": 0},
              {"k": 2, "l": 1, "value": 1}],
    "weights": {"kind": "dcg", "qualities": [5, 4, 3, 2, 1]}
  })");
  nlohmann::ordered_json out = instance_to_json(instance_from_json(j));
  REQUIRE(out.contains("upper"));
  const auto& upper = out["upper"];
  REQUIRE(upper.size() == 3);
  CHECK(upper[0] == json({{"k", 2}, {"l", 1}, {"value", 1}}));
  CHECK(upper[1] == json({{"k", 1}, {"l", 2}, {"value", 0}}));
  CHECK(upper[2] == json({{"k", 2}, {"l", 2}, {"value", 1}}));
  CHECK_FALSE(out.contains("lower"));
}

TEST_CASE("unknown keys are rejected wherever they appear") {
  json top = parse(kMixedInstance);
  top["comment"] = "hello";
  CHECK_THROWS_WITH_AS((void)instance_from_json(top), doctest::Contains("unknown key"),
                       ValidationError);

  json bound = parse(kMixedInstance);
  bound["upper"][0]["weight"] = 2;
  CHECK_THROWS_WITH_AS((void)instance_from_json(bound), doctest::Contains("unknown key"),
                       ValidationError);

  json weights = parse(kMixedInstance);
  weights["weights"]["scale"] = 7;
  CHECK_THROWS_WITH_AS((void)instance_from_json(weights), doctest::Contains("unknown key"),
                       ValidationError);
}

TEST_CASE("every parse problem is reported, not just the first") {
  json j = parse(R"({
    "m": "four", "n": 2,
    "properties": [[1, "x"]],
    "upper": [{"k": 1, "value": 0}]
  })");
  try {
    (void)instance_from_json(j);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.errors().size() >= 4);  // bad m, bad property item, missing l, missing weights
  }
}

TEST_CASE("matrix shape problems are caught at the boundary") {
  json ragged = parse(kMixedInstance);
  ragged["weights"]["matrix"] = json::array({json::array({1, 2}), json::array({1})});
  CHECK_THROWS_AS((void)instance_from_json(ragged), ValidationError);

  json text_cell = parse(kMixedInstance);
  text_cell["weights"]["matrix"][0][0] = "big";
  CHECK_THROWS_AS((void)instance_from_json(text_cell), ValidationError);

  json empty = parse(kMixedInstance);
  empty["weights"]["matrix"] = json::array();
  CHECK_THROWS_AS((void)instance_from_json(empty), ValidationError);

  json unknown_kind = parse(kMixedInstance);
  unknown_kind["weights"] = json{{"kind", "cosine"}, {"qualities", json::array({1})}};
  CHECK_THROWS_WITH_AS((void)instance_from_json(unknown_kind),
                       doctest::Contains("unknown kind"), ValidationError);
}

TEST_CASE("ranking files are 1-based and tolerate metadata") {
  Instance inst = instance_from_json(parse(kMixedInstance));
  Ranking r = ranking_from_json(parse(R"({"ranking": [2, 1, 4], "value": 99})"), inst);
  CHECK(r == Ranking{{1, 0, 3}});

  CHECK_THROWS_AS((void)ranking_from_json(parse(R"({"ranking": [2, 1]})"), inst),
                  ValidationError);
  CHECK_THROWS_AS((void)ranking_from_json(parse(R"({"ranking": [2, 2, 1]})"), inst),
                  ValidationError);
  CHECK_THROWS_AS((void)ranking_from_json(parse(R"({"ranking": [2, 1, 9]})"), inst),
                  ValidationError);
  CHECK_THROWS_AS((void)ranking_from_json(parse(R"({"order": [1, 2, 3]})"), inst),
                  ValidationError);
}

TEST_CASE("instance files round trip through disk") {
  Instance inst = instance_from_json(parse(kMixedInstance));
  const std::string path = scratch_dir() + "/io_roundtrip.json";
  write_instance_file(inst, path);
  CHECK(load_instance_file(path) == inst);

  CHECK_THROWS_WITH_AS((void)load_instance_file(scratch_dir() + "/does_not_exist.json"),
                       doctest::Contains("cannot open"), ValidationError);

  const std::string garbage = write_scratch_file("garbage.json", "{not json");
  CHECK_THROWS_AS((void)load_instance_file(garbage), ValidationError);
}

TEST_CASE("solve reports serialize their outcome fields") {
  SolveReport rep;
  rep.algorithm = "dp";
  rep.feasible = true;
  rep.ranking = Ranking{{2, 0}};
  rep.value = 7.5;
  rep.guarantee = "exact";
  rep.runtime_ms = 1.25;
  nlohmann::ordered_json j = solve_report_to_json(rep);
  CHECK(j["algorithm"] == "dp");
  CHECK(j["feasible"] == true);
  CHECK(j["ranking"] == json::array({3, 1}));
  CHECK(j["value"] == 7.5);
  CHECK(j["guarantee"] == "exact");
  CHECK_FALSE(j.contains("violations"));
  CHECK_FALSE(j.contains("no_applicable"));

  SolveReport none;
  none.algorithm = "auto";
  none.no_applicable = true;
  none.message = "nothing applies";
  nlohmann::ordered_json k = solve_report_to_json(none);
  CHECK(k["no_applicable"] == true);
  CHECK(k["feasible"] == false);
  CHECK_FALSE(k.contains("ranking"));
}

TEST_CASE("constraint summaries name each violated bound") {
  Instance inst = gen_capped_pair();
  nlohmann::ordered_json j =
      constraint_summary_json(inst, Ranking{{0, 1, 2, 3}});
  CHECK(j["value"] == 30.0);
  CHECK(j["feasible"] == false);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["k"] == 2);
  CHECK(j["violations"][0]["l"] == 1);
  CHECK(j["violations"][0]["count"] == 2);
  CHECK(j["violations"][0]["upper"] == 1);
  CHECK(j["violations"][0]["factor"] == 2.0);
  CHECK(j["max_violation_factor"] == 2.0);

  nlohmann::ordered_json ok = constraint_summary_json(inst, Ranking{{0, 2, 1, 3}});
  CHECK(ok["feasible"] == true);
  CHECK(ok["violations"].empty());
  CHECK(ok["value"] == 29.0);
}
