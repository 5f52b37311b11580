#include "fairrank/dispatch.hpp"

#include <chrono>
#include <string>

#include "fairrank/error.hpp"

namespace fairrank {

const char* algo_name(Algo algo) {
  switch (algo) {
    case Algo::automatic: return "auto";
    case Algo::greedy: return "greedy";
    case Algo::dp: return "dp";
    case Algo::flow: return "flow";
    case Algo::approx: return "approx";
    case Algo::oracle: return "oracle";
  }
  return "?";
}

bool parse_algo(const std::string& name, Algo* out) {
  if (name == "auto") *out = Algo::automatic;
  else if (name == "greedy") *out = Algo::greedy;
  else if (name == "dp") *out = Algo::dp;
  else if (name == "flow") *out = Algo::flow;
  else if (name == "approx") *out = Algo::approx;
  else if (name == "oracle") *out = Algo::oracle;
  else return false;
  return true;
}

std::optional<Algo> select_algorithm(const Instance& inst, const SelectOptions& sel,
                                     std::string* why) {
  auto note = [&](const std::string& text) {
    if (why) *why = text;
  };

  bool monge = true;
  std::string monge_note;
  if (inst.weights().is_explicit()) {
    MongeWitness wit = check_monge(inst.weights().matrix());
    if (!wit.holds) {
      monge = false;
      monge_note = "weights fail the exchange conditions (" + wit.describe() + ")";
    }
  }

  TypeProfile tp = type_profile(inst);
  if (monge && tp.delta <= 1) {
    if (!inst.has_lower_bounds()) {
      note("properties are disjoint with upper bounds only");
      return Algo::greedy;
    }
    note("properties are disjoint with lower bounds present");
    return Algo::flow;
  }
  if (monge) {
    std::uint64_t states = estimate_dp_states(inst);
    if (states <= sel.dp_auto_limit) {
      note("estimated table size " + std::to_string(states) + " fits the limit of " +
           std::to_string(sel.dp_auto_limit));
      return Algo::dp;
    }
    if (!inst.has_lower_bounds()) {
      note("estimated table size " + std::to_string(states) + " exceeds the limit of " +
           std::to_string(sel.dp_auto_limit) + "; overlap forces the two-phase scheme");
      return Algo::approx;
    }
    note("estimated table size " + std::to_string(states) +
         " exceeds the limit and lower bounds rule out the two-phase scheme");
    return std::nullopt;
  }

  // Non-conforming explicit weights: the exact solvers are off the table.
  if (!inst.has_lower_bounds()) {
    note(monge_note + "; falling back to the two-phase scheme");
    return Algo::approx;
  }
  note(monge_note + " and lower bounds rule out the two-phase scheme");
  return std::nullopt;
}

SolveReport dispatch_solve(const Instance& inst, const SolveOptions& opt) {
  SolveReport report;
  Algo algo = opt.algo;
  std::string why;
  if (algo == Algo::automatic) {
    std::optional<Algo> picked = select_algorithm(inst, opt.select, &why);
    if (!picked) {
      report.algorithm = "none";
      report.no_applicable = true;
      report.message = why;
      return report;
    }
    algo = *picked;
  }
  report.algorithm = algo_name(algo);
  if (!why.empty()) report.message = why;

  const auto start = std::chrono::steady_clock::now();
  switch (algo) {
    case Algo::greedy: {
      GreedyResult r = solve_greedy(inst, opt.greedy);
      report.feasible = r.feasible;
      report.ranking = std::move(r.ranking);
      report.value = r.value;
      report.guarantee = "exact";
      if (!r.feasible)
        report.message = "no admissible item at position " + std::to_string(r.stuck_position);
      break;
    }
    case Algo::flow: {
      FlowResult r = solve_flow(inst, opt.flow);
      report.feasible = r.feasible;
      report.ranking = std::move(r.ranking);
      report.value = r.value;
      report.guarantee = "exact";
      if (!r.feasible) report.message = "no ranking satisfies the bounds";
      break;
    }
    case Algo::dp: {
      DpResult r = solve_dp(inst, opt.dp);
      report.feasible = r.feasible;
      report.ranking = std::move(r.ranking);
      report.value = r.value;
      report.guarantee = "exact";
      if (!r.feasible) report.message = "no ranking satisfies the bounds";
      break;
    }
    case Algo::approx: {
      ApproxReport r = solve_approx(inst);
      report.feasible = r.complete;
      report.ranking = std::move(r.ranking);
      report.value = r.value;
      report.guarantee = "(delta+2)-approx";
      report.violations = std::move(r.violations);
      report.max_violation_factor = r.max_violation_factor;
      if (!r.complete)
        report.message = "fill phase stuck at position " + std::to_string(r.stuck_position) +
                         (r.abundance_warning ? " (abundance condition not satisfied)" : "");
      break;
    }
    case Algo::oracle: {
      OracleResult r = brute_force_solve(inst, opt.oracle);
      report.feasible = r.feasible;
      report.ranking = std::move(r.ranking);
      report.value = r.value;
      report.guarantee = "exact";
      if (!r.feasible) report.message = "no ranking satisfies the bounds";
      break;
    }
    case Algo::automatic: break;  // resolved above
  }
  const auto stop = std::chrono::steady_clock::now();
  report.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

}  // namespace fairrank
