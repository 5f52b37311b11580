#include "fairrank/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fairrank/error.hpp"
#include "fairrank/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fairrank {

namespace {

using nlohmann::json;

std::string num(double v) { return json(v).dump(); }  // shortest round-trip form

}  // namespace

std::vector<BenchSuite> parse_bench_suites(const json& spec) {
  std::vector<std::string> errors;
  std::vector<BenchSuite> suites;
  if (!spec.is_object() || !spec.contains("suites") || !spec["suites"].is_array()) {
    throw ValidationError("bench spec: expected an object with a \"suites\" array");
  }
  int index = 0;
  for (const auto& s : spec["suites"]) {
    ++index;
    const std::string at = "suites[" + std::to_string(index) + "]";
    if (!s.is_object()) {
      errors.push_back(at + " must be an object");
      continue;
    }
    BenchSuite suite;
    for (const auto& kv : s.items()) {
      const std::string& key = kv.key();
      const json& v = kv.value();
      if (key == "name" && v.is_string()) suite.name = v.get<std::string>();
      else if (key == "count" && v.is_number_integer()) suite.count = v.get<int>();
      else if (key == "base_seed" && v.is_number_unsigned())
        suite.base_seed = v.get<std::uint64_t>();
      else if (key == "m" && v.is_number_integer()) suite.params.m = v.get<int>();
      else if (key == "n" && v.is_number_integer()) suite.params.n = v.get<int>();
      else if (key == "p" && v.is_number_integer()) suite.params.p = v.get<int>();
      else if (key == "delta" && v.is_number_integer()) suite.params.delta = v.get<int>();
      else if (key == "metric" && v.is_string()) {
        if (!parse_metric_kind(v.get<std::string>(), &suite.params.metric) ||
            suite.params.metric == MetricKind::explicit_matrix)
          errors.push_back(at + ": unknown metric \"" + v.get<std::string>() + "\"");
      } else if (key == "quality_dist" && v.is_string()) {
        if (!parse_quality_dist(v.get<std::string>(), &suite.params.quality_dist))
          errors.push_back(at + ": unknown quality_dist \"" + v.get<std::string>() + "\"");
      } else if (key == "theta" && v.is_number()) suite.params.theta = v.get<double>();
      else if (key == "lower_rate" && v.is_number())
        suite.params.lower_rate = v.get<double>();
      else if (key == "algorithms" && v.is_array()) {
        for (const auto& a : v) {
          Algo algo;
          if (!a.is_string() || !parse_algo(a.get<std::string>(), &algo))
            errors.push_back(at + ": bad algorithm entry " + a.dump());
          else suite.algorithms.push_back(algo);
        }
      } else if (key == "oracle" && v.is_boolean()) suite.with_oracle = v.get<bool>();
      else errors.push_back(at + ": unknown or mistyped key \"" + key + "\"");
    }
    if (suite.name.empty()) errors.push_back(at + ": missing \"name\"");
    if (suite.count < 1) errors.push_back(at + ": count must be >= 1");
    if (suite.algorithms.empty()) errors.push_back(at + ": missing \"algorithms\"");
    // Surface bad generator parameters now, not from a worker thread.
    try {
      GenParams probe = suite.params;
      probe.seed = suite.base_seed;
      gen_random(probe);
    } catch (const ValidationError& e) {
      errors.push_back(at + ": " + e.what());
    }
    suites.push_back(std::move(suite));
  }
  if (!errors.empty()) throw ValidationError(errors);
  return suites;
}

std::vector<BenchRow> run_bench(const std::vector<BenchSuite>& suites, int threads) {
  struct Job {
    const BenchSuite* suite;
    std::uint64_t seed;
    std::size_t slot;  // first row index for this instance
  };
  std::vector<Job> jobs;
  std::size_t total_rows = 0;
  for (const auto& suite : suites) {
    for (int i = 0; i < suite.count; ++i) {
      jobs.push_back({&suite, suite.base_seed + static_cast<std::uint64_t>(i), total_rows});
      total_rows += suite.algorithms.size();
    }
  }
  std::vector<BenchRow> rows(total_rows);
  std::vector<std::string> failures(jobs.size());

  int resolved = threads;
#ifdef _OPENMP
  if (resolved <= 0) resolved = omp_get_max_threads();
#else
  resolved = 1;
#endif

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(resolved)
#endif
  for (std::size_t jid = 0; jid < jobs.size(); ++jid) {
    const Job& job = jobs[jid];
    try {
      GenParams params = job.suite->params;
      params.seed = job.seed;
      Instance inst = gen_random(params);
      const int delta_actual = type_profile(inst).delta;

      bool has_oracle = false, oracle_feasible = false;
      double oracle_value = 0.0;
      if (job.suite->with_oracle) {
        try {
          OracleResult o = brute_force_solve(inst);
          has_oracle = true;
          oracle_feasible = o.feasible;
          oracle_value = o.value;
        } catch (const BudgetError&) {
          // too large to enumerate; the row simply has no reference value
        }
      }

      for (std::size_t a = 0; a < job.suite->algorithms.size(); ++a) {
        BenchRow& row = rows[job.slot + a];
        row.suite = job.suite->name;
        row.seed = job.seed;
        row.params = params;
        row.delta_actual = delta_actual;
        row.has_oracle = has_oracle;
        row.oracle_feasible = oracle_feasible;
        row.oracle_value = oracle_value;

        SolveOptions opt;
        opt.algo = job.suite->algorithms[a];
        SolveReport rep = dispatch_solve(inst, opt);
        row.algorithm = rep.algorithm;
        row.feasible = rep.feasible;
        row.has_value = rep.feasible;
        row.value = rep.value;
        row.max_violation_factor = rep.max_violation_factor;
        row.runtime_ms = rep.runtime_ms;
      }
    } catch (const std::exception& e) {
      failures[jid] = e.what();
    }
  }

  for (std::size_t jid = 0; jid < jobs.size(); ++jid)
    if (!failures[jid].empty())
      throw BudgetError("bench job for suite " + jobs[jid].suite->name + " seed " +
                        std::to_string(jobs[jid].seed) + " failed: " + failures[jid]);
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "suite,seed,m,n,p,delta,delta_actual,metric,theta,lower_rate,algorithm,"
         "feasible,value,oracle_feasible,oracle_value,ratio,max_violation_factor,"
         "runtime_ms\n";
  for (const auto& r : rows) {
    out << r.suite << ',' << r.seed << ',' << r.params.m << ',' << r.params.n << ','
        << r.params.p << ',' << r.params.delta << ',' << r.delta_actual << ','
        << metric_kind_name(r.params.metric) << ',' << num(r.params.theta) << ','
        << num(r.params.lower_rate) << ',' << r.algorithm << ','
        << (r.feasible ? "true" : "false") << ',';
    if (r.has_value) out << num(r.value);
    out << ',';
    if (r.has_oracle) out << (r.oracle_feasible ? "true" : "false");
    out << ',';
    if (r.has_oracle && r.oracle_feasible) out << num(r.oracle_value);
    out << ',';
    if (r.has_value && r.has_oracle && r.oracle_feasible && r.oracle_value > 0.0)
      out << num(r.value / r.oracle_value);
    out << ',' << num(r.max_violation_factor) << ',' << num(r.runtime_ms) << '\n';
  }
  return out.str();
}

namespace {

const char* suite_color(std::size_t index) {
  static const char* palette[] = {"#4878b0", "#d65f5f", "#59a14f", "#b07aa1",
                                  "#e49444", "#76b7b2"};
  return palette[index % 6];
}

// Minimal hand-rolled scatter plot; no external tooling involved.
struct Svg {
  std::ostringstream body;
  double width, height;

  Svg(double w, double h) : width(w), height(h) {}

  void line(double x1, double y1, double x2, double y2, const char* stroke,
            double stroke_width = 1.0) {
    body << "<line x1='" << x1 << "' y1='" << y1 << "' x2='" << x2 << "' y2='" << y2
         << "' stroke='" << stroke << "' stroke-width='" << stroke_width << "'/>\n";
  }
  void circle(double cx, double cy, double r, const char* fill) {
    body << "<circle cx='" << cx << "' cy='" << cy << "' r='" << r << "' fill='" << fill
         << "' fill-opacity='0.75'/>\n";
  }
  void text(double x, double y, const std::string& s, int size = 11,
            const char* anchor = "start") {
    body << "<text x='" << x << "' y='" << y << "' font-size='" << size
         << "' font-family='sans-serif' text-anchor='" << anchor << "'>" << s
         << "</text>\n";
  }
  std::string str() const {
    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='"
        << height << "' viewBox='0 0 " << width << " " << height << "'>\n"
        << "<rect width='" << width << "' height='" << height << "' fill='white'/>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

}  // namespace

void write_bench_plots(const std::vector<BenchRow>& rows, const std::string& dir) {
  std::vector<std::string> suite_names;
  auto suite_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < suite_names.size(); ++i)
      if (suite_names[i] == name) return i;
    suite_names.push_back(name);
    return suite_names.size() - 1;
  };

  // Chart 1: value / enumeration optimum, one dot per row that has both.
  {
    const double w = 720, h = 360, ml = 60, mr = 20, mt = 30, mb = 40;
    Svg svg(w, h);
    std::vector<const BenchRow*> pts;
    for (const auto& r : rows)
      if (r.has_value && r.has_oracle && r.oracle_feasible && r.oracle_value > 0.0)
        pts.push_back(&r);
    double ymin = 1.0, ymax = 1.0;
    for (const BenchRow* r : pts) {
      double ratio = r->value / r->oracle_value;
      ymin = std::min(ymin, ratio);
      ymax = std::max(ymax, ratio);
    }
    ymin = std::min(ymin - 0.02, 0.98);
    ymax = std::max(ymax + 0.02, 1.02);
    auto xpos = [&](std::size_t i) {
      return ml + (w - ml - mr) * (pts.size() <= 1 ? 0.5
                                                   : static_cast<double>(i) / (pts.size() - 1));
    };
    auto ypos = [&](double v) { return h - mb - (h - mt - mb) * (v - ymin) / (ymax - ymin); };
    svg.line(ml, mt, ml, h - mb, "#333");
    svg.line(ml, h - mb, w - mr, h - mb, "#333");
    svg.line(ml, ypos(1.0), w - mr, ypos(1.0), "#999");
    svg.text(ml - 8, ypos(1.0) + 4, "1.0", 11, "end");
    svg.text(ml - 8, ypos(ymin) + 4, num(ymin), 11, "end");
    svg.text(ml - 8, ypos(ymax) + 4, num(ymax), 11, "end");
    svg.text(w / 2, h - 10, "instances (suite/seed order)", 12, "middle");
    svg.text(w / 2, 18, "solver value relative to enumeration optimum", 13, "middle");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const BenchRow* r = pts[i];
      svg.circle(xpos(i), ypos(r->value / r->oracle_value), 3.5,
                 suite_color(suite_index(r->suite)));
    }
    std::ofstream out(dir + "/bench_ratio.svg");
    out << svg.str();
  }

  // Chart 2: runtime against m * n, log-log.
  {
    const double w = 720, h = 360, ml = 70, mr = 20, mt = 30, mb = 40;
    Svg svg(w, h);
    auto safe_log = [](double v) { return std::log10(std::max(v, 1e-4)); };
    double xmin = 1e30, xmax = -1e30, ymin = 1e30, ymax = -1e30;
    for (const auto& r : rows) {
      double x = safe_log(static_cast<double>(r.params.m) * r.params.n);
      double y = safe_log(r.runtime_ms);
      xmin = std::min(xmin, x), xmax = std::max(xmax, x);
      ymin = std::min(ymin, y), ymax = std::max(ymax, y);
    }
    if (rows.empty()) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (xmax - xmin < 1e-9) xmax = xmin + 1;
    if (ymax - ymin < 1e-9) ymax = ymin + 1;
    auto xpos = [&](double v) { return ml + (w - ml - mr) * (v - xmin) / (xmax - xmin); };
    auto ypos = [&](double v) { return h - mb - (h - mt - mb) * (v - ymin) / (ymax - ymin); };
    svg.line(ml, mt, ml, h - mb, "#333");
    svg.line(ml, h - mb, w - mr, h - mb, "#333");
    svg.text(w / 2, 18, "runtime against instance size", 13, "middle");
    svg.text(w / 2, h - 10, "log10(m * n)", 12, "middle");
    svg.text(16, h / 2, "log10(ms)", 12, "middle");
    svg.text(ml - 8, ypos(ymin) + 4, num(ymin), 10, "end");
    svg.text(ml - 8, ypos(ymax) + 4, num(ymax), 10, "end");
    svg.text(xpos(xmin), h - mb + 16, num(xmin), 10, "middle");
    svg.text(xpos(xmax), h - mb + 16, num(xmax), 10, "middle");
    for (const auto& r : rows) {
      double x = safe_log(static_cast<double>(r.params.m) * r.params.n);
      double y = safe_log(r.runtime_ms);
      svg.circle(xpos(x), ypos(y), 3.5, suite_color(suite_index(r.suite)));
    }
    // Legend, one line per suite.
    double ly = mt + 6;
    for (std::size_t i = 0; i < suite_names.size(); ++i) {
      svg.circle(w - mr - 150, ly, 4, suite_color(i));
      svg.text(w - mr - 140, ly + 4, suite_names[i], 11);
      ly += 16;
    }
    std::ofstream out(dir + "/bench_runtime.svg");
    out << svg.str();
  }
}

}  // namespace fairrank
