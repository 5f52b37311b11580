#include "fairrank/io.hpp"

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "fairrank/error.hpp"

namespace fairrank {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where, std::vector<std::string>* errors) {
  for (const auto& kv : obj.items())
    if (!allowed.count(kv.key()))
      errors->push_back(where + ": unknown key \"" + kv.key() + "\"");
}

bool get_int(const json& obj, const std::string& key, const std::string& where, int* out,
             std::vector<std::string>* errors) {
  if (!obj.contains(key)) {
    errors->push_back(where + ": missing \"" + key + "\"");
    return false;
  }
  if (!obj[key].is_number_integer()) {
    errors->push_back(where + ": \"" + key + "\" must be an integer");
    return false;
  }
  *out = obj[key].get<int>();
  return true;
}

std::vector<InstanceSpec::Bound> parse_bounds(const json& arr, const std::string& where,
                                              std::vector<std::string>* errors) {
  std::vector<InstanceSpec::Bound> out;
  if (!arr.is_array()) {
    errors->push_back(where + " must be an array of {k, l, value} objects");
    return out;
  }
  int index = 0;
  for (const auto& e : arr) {
    ++index;
    const std::string at = where + "[" + std::to_string(index) + "]";
    if (!e.is_object()) {
      errors->push_back(at + " must be an object");
      continue;
    }
    reject_unknown_keys(e, {"k", "l", "value"}, at, errors);
    InstanceSpec::Bound b;
    int ell1 = 0;
    bool ok = get_int(e, "k", at, &b.k, errors);
    ok = get_int(e, "l", at, &ell1, errors) && ok;
    ok = get_int(e, "value", at, &b.value, errors) && ok;
    if (!ok) continue;
    b.ell = ell1 - 1;
    out.push_back(b);
  }
  return out;
}

WeightSource parse_weights(const json& w, std::vector<std::string>* errors) {
  if (!w.is_object() || !w.contains("kind") || !w["kind"].is_string()) {
    errors->push_back("weights: expected an object with a \"kind\" string");
    return {};
  }
  const std::string kind = w["kind"].get<std::string>();
  if (kind == "explicit") {
    reject_unknown_keys(w, {"kind", "matrix"}, "weights", errors);
    if (!w.contains("matrix") || !w["matrix"].is_array()) {
      errors->push_back("weights: explicit kind requires a \"matrix\" array of rows");
      return {};
    }
    const auto& rows = w["matrix"];
    std::size_t cols = 0;
    std::int64_t cells = 0;
    for (const auto& row : rows) {
      if (!row.is_array()) {
        errors->push_back("weights.matrix: rows must be arrays");
        return {};
      }
      if (cols == 0) cols = row.size();
      if (row.size() != cols) {
        errors->push_back("weights.matrix: rows have differing lengths");
        return {};
      }
      cells += static_cast<std::int64_t>(row.size());
    }
    if (rows.empty() || cols == 0) {
      errors->push_back("weights.matrix must be non-empty");
      return {};
    }
    if (cells > kMaxExplicitCells) {
      errors->push_back("weights.matrix has " + std::to_string(cells) +
                        " cells, beyond the explicit limit of " +
                        std::to_string(kMaxExplicitCells) + "; use a metric kind instead");
      return {};
    }
    Matrix mat(static_cast<int>(rows.size()), static_cast<int>(cols));
    int i = 0;
    for (const auto& row : rows) {
      int j = 0;
      for (const auto& cell : row) {
        if (!cell.is_number()) {
          errors->push_back("weights.matrix: entries must be numbers");
          return {};
        }
        mat(i, j++) = cell.get<double>();
      }
      ++i;
    }
    return WeightSource::from_matrix(std::move(mat));
  }

  MetricKind mk;
  if (!parse_metric_kind(kind, &mk) || mk == MetricKind::explicit_matrix) {
    errors->push_back("weights: unknown kind \"" + kind + "\"");
    return {};
  }
  reject_unknown_keys(w, {"kind", "qualities", "discount"}, "weights", errors);
  MetricSpec spec;
  spec.kind = mk;
  if (!w.contains("qualities") || !w["qualities"].is_array()) {
    errors->push_back("weights: metric kinds require a \"qualities\" array");
    return {};
  }
  for (const auto& q : w["qualities"]) {
    if (!q.is_number()) {
      errors->push_back("weights.qualities: entries must be numbers");
      return {};
    }
    spec.qualities.push_back(q.get<double>());
  }
  if (w.contains("discount")) {
    if (!w["discount"].is_array()) {
      errors->push_back("weights.discount must be an array of numbers");
      return {};
    }
    for (const auto& d : w["discount"]) {
      if (!d.is_number()) {
        errors->push_back("weights.discount: entries must be numbers");
        return {};
      }
      spec.discount.push_back(d.get<double>());
    }
  }
  return WeightSource::from_metric(std::move(spec));
}

ordered_json bounds_to_json(const std::vector<InstanceSpec::Bound>& bounds) {
  ordered_json arr = ordered_json::array();
  for (const auto& b : bounds)
    arr.push_back(ordered_json{{"k", b.k}, {"l", b.ell + 1}, {"value", b.value}});
  return arr;
}

ordered_json ranking_to_json_1based(const Ranking& r) {
  ordered_json arr = ordered_json::array();
  for (int j = 0; j < r.size(); ++j) arr.push_back(r[j] + 1);
  return arr;
}

}  // namespace

Instance instance_from_json(const json& j) {
  std::vector<std::string> errors;
  if (!j.is_object()) throw ValidationError("instance: top level must be an object");
  reject_unknown_keys(j, {"m", "n", "properties", "lower", "upper", "weights"}, "instance",
                      &errors);

  InstanceSpec spec;
  get_int(j, "m", "instance", &spec.m, &errors);
  get_int(j, "n", "instance", &spec.n, &errors);

  if (!j.contains("properties") || !j["properties"].is_array()) {
    errors.push_back("instance: missing \"properties\" array");
  } else {
    int ell = 0;
    for (const auto& lst : j["properties"]) {
      ++ell;
      std::vector<int> members;
      if (!lst.is_array()) {
        errors.push_back("properties[" + std::to_string(ell) + "] must be an array");
      } else {
        for (const auto& it : lst) {
          if (!it.is_number_integer()) {
            errors.push_back("properties[" + std::to_string(ell) +
                             "]: items must be integers");
            break;
          }
          members.push_back(it.get<int>() - 1);
        }
      }
      spec.properties.push_back(std::move(members));
    }
  }

  if (j.contains("lower")) spec.lower = parse_bounds(j["lower"], "lower", &errors);
  if (j.contains("upper")) spec.upper = parse_bounds(j["upper"], "upper", &errors);

  if (!j.contains("weights")) errors.push_back("instance: missing \"weights\"");
  else spec.weights = parse_weights(j["weights"], &errors);

  if (!errors.empty()) throw ValidationError(errors);
  return validate_instance(spec);
}

ordered_json instance_to_json(const Instance& inst) {
  InstanceSpec spec = to_spec(inst);
  ordered_json j;
  j["m"] = spec.m;
  j["n"] = spec.n;
  ordered_json props = ordered_json::array();
  for (const auto& lst : spec.properties) {
    ordered_json members = ordered_json::array();
    for (int item : lst) members.push_back(item + 1);
    props.push_back(std::move(members));
  }
  j["properties"] = std::move(props);
  if (!spec.lower.empty()) j["lower"] = bounds_to_json(spec.lower);
  if (!spec.upper.empty()) j["upper"] = bounds_to_json(spec.upper);

  ordered_json w;
  const WeightSource& ws = inst.weights();
  if (ws.is_explicit()) {
    w["kind"] = "explicit";
    ordered_json rows = ordered_json::array();
    const Matrix& mat = ws.matrix();
    for (int i = 0; i < mat.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (int jj = 0; jj < mat.cols(); ++jj) row.push_back(mat(i, jj));
      rows.push_back(std::move(row));
    }
    w["matrix"] = std::move(rows);
  } else {
    w["kind"] = metric_kind_name(ws.kind());
    w["qualities"] = ws.metric().qualities;
    if (!ws.metric().discount.empty()) w["discount"] = ws.metric().discount;
  }
  j["weights"] = std::move(w);
  return j;
}

std::string serialize_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return instance_from_json(j);
}

void write_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << serialize_instance(inst);
}

Ranking ranking_from_json(const json& j, const Instance& inst) {
  std::vector<std::string> errors;
  const json* arr = nullptr;
  if (j.is_object() && j.contains("ranking") && j["ranking"].is_array()) arr = &j["ranking"];
  else errors.push_back("expected an object with a \"ranking\" array");
  std::vector<int> items;
  if (arr) {
    for (const auto& it : *arr) {
      if (!it.is_number_integer()) {
        errors.push_back("ranking: items must be integers");
        break;
      }
      items.push_back(it.get<int>() - 1);
    }
  }
  if (errors.empty()) {
    if (static_cast<int>(items.size()) != inst.num_positions())
      errors.push_back("ranking has " + std::to_string(items.size()) + " items, expected " +
                       std::to_string(inst.num_positions()));
    std::set<int> seen;
    for (int it : items) {
      if (it < 0 || it >= inst.num_items())
        errors.push_back("ranking: item " + std::to_string(it + 1) + " out of range");
      else if (!seen.insert(it).second)
        errors.push_back("ranking: item " + std::to_string(it + 1) + " repeated");
    }
  }
  if (!errors.empty()) throw ValidationError(errors);
  return Ranking{std::move(items)};
}

Ranking load_ranking_file(const std::string& path, const Instance& inst) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return ranking_from_json(j, inst);
}

ordered_json solve_report_to_json(const SolveReport& report) {
  ordered_json j;
  j["algorithm"] = report.algorithm;
  j["feasible"] = report.feasible;
  if (report.no_applicable) j["no_applicable"] = true;
  if (!report.message.empty()) j["message"] = report.message;
  if (report.feasible) {
    j["ranking"] = ranking_to_json_1based(report.ranking);
    j["value"] = report.value;
    j["guarantee"] = report.guarantee;
    if (!report.violations.empty()) {
      ordered_json arr = ordered_json::array();
      for (const auto& v : report.violations)
        arr.push_back(ordered_json{{"k", v.k},
                                   {"l", v.ell + 1},
                                   {"count", v.count},
                                   {"upper", v.bound},
                                   {"factor", v.factor}});
      j["violations"] = std::move(arr);
      j["max_violation_factor"] = report.max_violation_factor;
    }
  }
  j["runtime_ms"] = report.runtime_ms;
  return j;
}

ordered_json constraint_summary_json(const Instance& inst, const Ranking& r) {
  ConstraintReport cr = check_constraints(inst, r);
  ordered_json j;
  j["value"] = ranking_value(inst, r);
  j["feasible"] = cr.feasible;
  ordered_json arr = ordered_json::array();
  for (const auto& e : cr.entries) {
    if (e.factor <= 1.0 && e.deficit == 0) continue;
    ordered_json v;
    v["k"] = e.k;
    v["l"] = e.ell + 1;
    v["count"] = e.count;
    if (e.deficit > 0) v["lower"] = e.lower;
    if (e.factor > 1.0) {
      v["upper"] = e.upper;
      v["factor"] = e.factor;
    }
    arr.push_back(std::move(v));
  }
  j["violations"] = std::move(arr);
  j["max_violation_factor"] = cr.max_violation_factor;
  return j;
}

ordered_json abundance_report_json(const AbundanceReport& report) {
  ordered_json j;
  j["satisfied"] = report.satisfied;
  j["lower_bound_warning"] = report.lower_bound_warning;
  ordered_json arr = ordered_json::array();
  for (const auto& pos : report.positions) {
    ordered_json p;
    p["k"] = pos.k;
    ordered_json open = ordered_json::array();
    for (int ell : pos.open_properties) open.push_back(ell + 1);
    p["open_properties"] = std::move(open);
    p["placeable_items"] = pos.placeable_items;
    arr.push_back(std::move(p));
  }
  j["positions"] = std::move(arr);
  return j;
}

}  // namespace fairrank
