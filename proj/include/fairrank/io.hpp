#pragma once

#include <string>

#include <json.hpp>

#include "fairrank/dispatch.hpp"
#include "fairrank/feasibility.hpp"
#include "fairrank/model.hpp"

namespace fairrank {

// JSON instance format (items, properties, and k are 1-based in files):
//   {
//     "m": 4, "n": 2,
//     "properties": [[1, 2], [3, 4]],
//     "lower": [{"k": 2, "l": 2, "value": 1}],
//     "upper": [{"k": 1, "l": 1, "value": 1}],
//     "weights": {"kind": "dcg", "qualities": [4, 3, 2, 1]}
//   }
// "lower"/"upper" may be omitted (defaults 0 and k). Explicit weights use
// {"kind": "explicit", "matrix": [[...], ...]}; matrices beyond 10^7 cells are
// rejected in favour of a metric spec. Unknown keys anywhere are errors.
// Serialization is canonical: entries equal to their default are dropped, bounds
// are sorted by (l, k), and parse(serialize(x)) == x.

inline constexpr std::int64_t kMaxExplicitCells = 10'000'000;

Instance instance_from_json(const nlohmann::json& j);
nlohmann::ordered_json instance_to_json(const Instance& inst);
std::string serialize_instance(const Instance& inst);  // pretty, trailing newline

Instance load_instance_file(const std::string& path);
void write_instance_file(const Instance& inst, const std::string& path);

// Accepts {"ranking": [...]} (1-based items), ignoring any solution metadata
// around it.
Ranking ranking_from_json(const nlohmann::json& j, const Instance& inst);
Ranking load_ranking_file(const std::string& path, const Instance& inst);

nlohmann::ordered_json solve_report_to_json(const SolveReport& report);

// Summary for a given ranking: value, feasibility, and any bound violations.
nlohmann::ordered_json constraint_summary_json(const Instance& inst, const Ranking& r);

nlohmann::ordered_json abundance_report_json(const AbundanceReport& report);

}  // namespace fairrank
