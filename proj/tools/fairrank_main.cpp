// Command-line front end. File formats are 1-based; everything behind
// instance_from_json / instance_to_json is 0-based.
//
// Exit codes: 0 solved / report written, 1 parse or validation failure,
// 2 infeasible (or a checked ranking violating its bounds), 3 nothing
// applicable (automatic selection failed, or a forced solver refused the
// instance).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairrank/bench.hpp"
#include "fairrank/dispatch.hpp"
#include "fairrank/error.hpp"
#include "fairrank/feasibility.hpp"
#include "fairrank/generators.hpp"
#include "fairrank/io.hpp"

namespace {

using fairrank::BudgetError;
using fairrank::PreconditionError;
using fairrank::ValidationError;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitNoSolver = 3;

void emit(const ordered_json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ValidationError("cannot write " + out_path);
  out << text;
}

struct SolveArgs {
  std::string instance_path;
  std::string algo = "auto";
  std::string out_path;
  std::uint64_t state_budget = 0;  // 0 = default / environment
  std::int64_t scale = 0;          // 0 = default
  int threads = 0;
  bool verify = false;
};

int run_solve(const SolveArgs& args) {
  fairrank::Instance inst = fairrank::load_instance_file(args.instance_path);

  fairrank::SolveOptions opt;
  if (!fairrank::parse_algo(args.algo, &opt.algo))
    throw ValidationError("unknown algorithm \"" + args.algo + "\"");
  if (const char* env = std::getenv("FAIRRANK_STATE_BUDGET")) {
    try {
      opt.dp.state_budget = std::stoull(env);
    } catch (const std::exception&) {
      throw ValidationError("FAIRRANK_STATE_BUDGET is not a number: " + std::string(env));
    }
  }
  if (args.state_budget > 0) opt.dp.state_budget = args.state_budget;
  if (args.scale > 0) opt.flow.scale = args.scale;
  opt.flow.verify = args.verify;
  opt.oracle.threads = args.threads;

  fairrank::SolveReport report = fairrank::dispatch_solve(inst, opt);
  emit(fairrank::solve_report_to_json(report), args.out_path);
  if (report.no_applicable) return kExitNoSolver;
  return report.feasible ? kExitOk : kExitInfeasible;
}

int run_check(const std::string& instance_path, const std::string& ranking_path,
              const std::string& out_path) {
  fairrank::Instance inst = fairrank::load_instance_file(instance_path);
  fairrank::Ranking r = fairrank::load_ranking_file(ranking_path, inst);
  ordered_json j = fairrank::constraint_summary_json(inst, r);
  emit(j, out_path);
  return j["feasible"].get<bool>() ? kExitOk : kExitInfeasible;
}

int run_abundance(const std::string& instance_path, const std::string& out_path) {
  fairrank::Instance inst = fairrank::load_instance_file(instance_path);
  emit(fairrank::abundance_report_json(fairrank::abundance_check(inst)), out_path);
  return kExitOk;
}

struct GenArgs {
  fairrank::GenParams params;
  std::string metric = "dcg";
  std::string quality_dist = "uniform_real";
  std::string out_path;
  bool capped_pair = false;
  std::string hypergraph_path;
};

fairrank::Instance gen_from_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  std::vector<std::string> errors;
  if (!j.is_object()) errors.push_back("hypergraph: top level must be an object");
  for (const auto& kv : j.items())
    if (kv.key() != "num_vertices" && kv.key() != "edges" && kv.key() != "n")
      errors.push_back("hypergraph: unknown key \"" + kv.key() + "\"");
  int num_vertices = 0, n = 0;
  std::vector<std::vector<int>> edges;
  if (!j.contains("num_vertices") || !j["num_vertices"].is_number_integer())
    errors.push_back("hypergraph: missing integer \"num_vertices\"");
  else num_vertices = j["num_vertices"].get<int>();
  if (!j.contains("n") || !j["n"].is_number_integer())
    errors.push_back("hypergraph: missing integer \"n\"");
  else n = j["n"].get<int>();
  if (!j.contains("edges") || !j["edges"].is_array())
    errors.push_back("hypergraph: missing \"edges\" array");
  else {
    for (const auto& e : j["edges"]) {
      std::vector<int> edge;
      if (!e.is_array()) {
        errors.push_back("hypergraph: edges must be arrays of vertex ids");
        break;
      }
      for (const auto& v : e) {
        if (!v.is_number_integer()) {
          errors.push_back("hypergraph: vertex ids must be integers");
          break;
        }
        edge.push_back(v.get<int>() - 1);
      }
      edges.push_back(std::move(edge));
    }
  }
  if (!errors.empty()) throw ValidationError(errors);
  return fairrank::gen_from_hypergraph(num_vertices, edges, n);
}

int run_gen(const GenArgs& args) {
  fairrank::Instance inst = [&] {
    if (args.capped_pair) return fairrank::gen_capped_pair();
    if (!args.hypergraph_path.empty()) return gen_from_hypergraph_file(args.hypergraph_path);
    fairrank::GenParams params = args.params;
    if (!fairrank::parse_metric_kind(args.metric, &params.metric) ||
        params.metric == fairrank::MetricKind::explicit_matrix)
      throw ValidationError("unknown metric \"" + args.metric + "\"");
    if (!fairrank::parse_quality_dist(args.quality_dist, &params.quality_dist))
      throw ValidationError("unknown quality distribution \"" + args.quality_dist + "\"");
    return fairrank::gen_random(params);
  }();
  if (args.out_path.empty()) std::cout << fairrank::serialize_instance(inst);
  else fairrank::write_instance_file(inst, args.out_path);
  return kExitOk;
}

int run_bench_cmd(const std::string& spec_path, const std::string& out_path,
                  const std::string& plots_dir, int threads) {
  std::ifstream in(spec_path);
  if (!in) throw ValidationError("cannot open " + spec_path);
  json spec;
  try {
    spec = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(spec_path + ": " + e.what());
  }
  std::vector<fairrank::BenchSuite> suites = fairrank::parse_bench_suites(spec);
  std::vector<fairrank::BenchRow> rows = fairrank::run_bench(suites, threads);
  const std::string csv = fairrank::bench_csv(rows);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot write " + out_path);
    out << csv;
  }
  if (!plots_dir.empty()) {
    std::filesystem::create_directories(plots_dir);
    fairrank::write_bench_plots(rows, plots_dir);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constrained ranking solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "rank items under prefix bounds");
  solve->add_option("instance", solve_args.instance_path, "instance JSON file")->required();
  solve->add_option("--algo", solve_args.algo,
                    "auto, greedy, dp, flow, approx, or oracle (default auto)");
  solve->add_option("--out", solve_args.out_path, "write the report here instead of stdout");
  solve->add_option("--state-budget", solve_args.state_budget,
                    "dp table cap (overrides FAIRRANK_STATE_BUDGET)");
  solve->add_option("--scale", solve_args.scale, "flow fixed-point factor");
  solve->add_option("--threads", solve_args.threads, "oracle worker count (0 = default)");
  solve->add_flag("--verify", solve_args.verify, "re-check flow invariants at every step");

  std::string check_instance, check_ranking, check_out;
  CLI::App* check = app.add_subcommand("check", "evaluate a ranking against an instance");
  check->add_option("instance", check_instance, "instance JSON file")->required();
  check->add_option("--ranking", check_ranking, "ranking JSON file")->required();
  check->add_option("--out", check_out, "write the summary here instead of stdout");

  std::string abundance_instance, abundance_out;
  CLI::App* abundance =
      app.add_subcommand("abundance", "report per-position placeable item counts");
  abundance->add_option("instance", abundance_instance, "instance JSON file")->required();
  abundance->add_option("--out", abundance_out, "write the report here instead of stdout");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--m", gen_args.params.m, "items");
  gen->add_option("--n", gen_args.params.n, "positions");
  gen->add_option("--p", gen_args.params.p, "properties");
  gen->add_option("--delta", gen_args.params.delta, "max properties per item");
  gen->add_option("--metric", gen_args.metric, "rank1, dcg, bradley_terry, footrule, rho");
  gen->add_option("--quality-dist", gen_args.quality_dist, "uniform_real or small_int");
  gen->add_option("--theta", gen_args.params.theta, "upper bound tightness in (0, 1]");
  gen->add_option("--lower-rate", gen_args.params.lower_rate,
                  "chance of a lower bound per property");
  gen->add_option("--seed", gen_args.params.seed, "generator seed");
  gen->add_option("--out", gen_args.out_path, "write the instance here instead of stdout");
  gen->add_flag("--capped-pair", gen_args.capped_pair, "emit the small worked example");
  gen->add_option("--hypergraph", gen_args.hypergraph_path,
                  "build a disjointness instance from this hypergraph JSON file");

  std::string bench_spec, bench_out, bench_plots;
  int bench_threads = 0;
  CLI::App* bench = app.add_subcommand("bench", "run seeded suites and emit CSV");
  bench->add_option("spec", bench_spec, "suite spec JSON file")->required();
  bench->add_option("--out", bench_out, "write CSV here instead of stdout");
  bench->add_option("--plots-dir", bench_plots, "also write SVG charts into this directory");
  bench->add_option("--threads", bench_threads, "parallel instance workers (0 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*solve) return run_solve(solve_args);
    if (*check) return run_check(check_instance, check_ranking, check_out);
    if (*abundance) return run_abundance(abundance_instance, abundance_out);
    if (*gen) return run_gen(gen_args);
    if (*bench) return run_bench_cmd(bench_spec, bench_out, bench_plots, bench_threads);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoSolver;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoSolver;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
