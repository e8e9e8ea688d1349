// ramp: risk-aware motion planning from the command line.
//
//   ramp plan --scenario s.json --algo incremental --out result.json --svg path.svg
//   ramp bench --scenario s.json --reps 50 --out table.csv
//   ramp oracle-check --scenario small.json
//   ramp render --scenario s.json --svg out.svg

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ramp/bench.hpp"
#include "ramp/errors.hpp"
#include "ramp/oracle.hpp"
#include "ramp/scenario.hpp"
#include "ramp/svg.hpp"

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kUnreachable = 2, kParse = 3, kResource = 4 };

struct Flags {
  std::string scenario;
  std::vector<std::string> algos;
  std::string out;
  std::string svg;
  std::optional<double> alpha;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> memory_budget;
  std::size_t reps = 10;
  bool trace = false;
};

/// Command-line values override the scenario file.
ramp::Scenario load_with_overrides(const Flags& f) {
  ramp::Scenario s = ramp::load_scenario(f.scenario);
  if (s.name.empty()) s.name = std::filesystem::path(f.scenario).stem().string();
  if (f.alpha) s.options.alpha = *f.alpha;
  if (f.seed) {
    s.options.seed = *f.seed;
    s.world.coastal.seed = *f.seed;
  }
  if (f.memory_budget) s.options.memory_budget = *f.memory_budget;
  if (f.trace) s.options.trace = true;
  return s;
}

std::vector<ramp::Algorithm> algorithms(const Flags& f, std::vector<ramp::Algorithm> fallback) {
  if (f.algos.empty()) return fallback;
  std::vector<ramp::Algorithm> out;
  for (const auto& a : f.algos) out.push_back(ramp::parse_algorithm(a));
  return out;
}

void print_summary(const ramp::PathResult& r) {
  if (!r.found()) {
    fmt::print("{}: unreachable ({} expansions)\n", to_string(r.algorithm), r.stats.expansions);
    return;
  }
  fmt::print("{}: cost {:.6f}  length {:.6f}  risk time {:.6f}  vertices {}  expansions {}  {:.6f} s\n",
             to_string(r.algorithm), r.cost(), r.length(), r.breakdown.risk_time(), r.path.size(),
             r.stats.expansions, r.stats.wall_seconds);
}

nlohmann::json trace_json(const std::vector<ramp::TraceRecord>& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : trace) {
    out.push_back({{"event", to_string(t.event)},
                   {"channel", ramp::format_channel(t.key)},
                   {"cost", t.cost},
                   {"lambda", t.lambda}});
  }
  return out;
}

int cmd_plan(const Flags& f) {
  const ramp::Scenario s = load_with_overrides(f);
  const ramp::BuiltScenario b = ramp::build_scenario(s);
  std::vector<ramp::PathResult> results;
  nlohmann::json docs = nlohmann::json::array();
  for (auto a : algorithms(f, {ramp::Algorithm::Incremental})) {
    std::vector<ramp::TraceRecord> trace;
    ramp::PathResult r = ramp::run_planner(b, a, s.options, s.options.trace ? &trace : nullptr);
    print_summary(r);
    nlohmann::json doc = ramp::result_document(r, b, s);
    if (s.options.trace && (a == ramp::Algorithm::Incremental || a == ramp::Algorithm::AStar)) {
      doc["trace"] = trace_json(trace);
    }
    docs.push_back(std::move(doc));
    results.push_back(std::move(r));
  }
  if (!f.out.empty()) {
    const nlohmann::json& out = docs.size() == 1 ? docs[0] : docs;
    ramp::write_text_file(f.out, out.dump(2) + "\n");
  }
  if (!f.svg.empty()) {
    ramp::write_text_file(f.svg, ramp::render_svg(b.world ? &*b.world : nullptr, b.refined, results));
  }
  for (const auto& r : results) {
    if (!r.found()) return kUnreachable;
  }
  return kOk;
}

int cmd_bench(const Flags& f) {
  const ramp::Scenario s = load_with_overrides(f);
  const ramp::BuiltScenario b = ramp::build_scenario(s);
  const auto algos = algorithms(f, {ramp::Algorithm::Dijkstra, ramp::Algorithm::MinRisk,
                                    ramp::Algorithm::Incremental, ramp::Algorithm::AStar,
                                    ramp::Algorithm::Precompute});
  const ramp::BenchReport report = ramp::run_bench(s, b, algos, f.reps);
  fmt::print("{}", ramp::bench_table(report));
  if (!f.out.empty()) ramp::write_text_file(f.out, ramp::bench_csv(report));
  return kOk;
}

int cmd_oracle_check(const Flags& f) {
  const ramp::Scenario s = load_with_overrides(f);
  const ramp::BuiltScenario b = ramp::build_scenario(s);
  ramp::CostModel cost;
  cost.alpha = s.options.alpha;
  const ramp::OracleOptimum best = ramp::brute_force_optimum(b.refined, b.start, b.goal, cost);
  fmt::print("oracle: cost {:.12f}  vertices {}\n", best.cost, best.path.size());
  bool ok = true;
  for (auto a : algorithms(f, {ramp::Algorithm::Incremental, ramp::Algorithm::AStar, ramp::Algorithm::Precompute})) {
    ramp::PathResult r;
    try {
      r = ramp::run_planner(b, a, s.options);
    } catch (const ramp::UnsupportedQuery& e) {
      fmt::print("{}: skipped ({})\n", to_string(a), e.what());
      continue;
    }
    const bool match = r.found() && std::abs(r.cost() - best.cost) <= 1e-9;
    fmt::print("{}: cost {:.12f}  {}\n", to_string(a), r.found() ? r.cost() : NAN, match ? "agrees" : "DIFFERS");
    ok = ok && match;
  }
  return ok ? kOk : kFailure;
}

int cmd_render(const Flags& f) {
  if (f.svg.empty()) throw ramp::InvalidParameter("render needs --svg <file>");
  const ramp::Scenario s = load_with_overrides(f);
  const ramp::BuiltScenario b = ramp::build_scenario(s);
  std::vector<ramp::PathResult> results;
  for (auto a : algorithms(f, {ramp::Algorithm::Incremental, ramp::Algorithm::Dijkstra,
                               ramp::Algorithm::MinRisk})) {
    results.push_back(ramp::run_planner(b, a, s.options));
    print_summary(results.back());
  }
  ramp::write_text_file(f.svg, ramp::render_svg(b.world ? &*b.world : nullptr, b.refined, results));
  return kOk;
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--scenario", f.scenario, "scenario JSON file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--algo", f.algos, "incremental, astar, precompute, dijkstra, minrisk")->delimiter(',');
  cmd->add_option("--alpha", f.alpha, "exposure penalty exponent");
  cmd->add_option("--seed", f.seed, "seed for procedural worlds");
  cmd->add_option("--memory-budget", f.memory_budget, "byte budget for precompute");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Risk-aware path planning"};
  app.require_subcommand(1);
  Flags f;

  auto* plan = app.add_subcommand("plan", "run planners and export the result");
  add_common(plan, f);
  plan->add_option("--out", f.out, "result JSON file");
  plan->add_option("--svg", f.svg, "SVG rendering of world and path");
  plan->add_flag("--trace", f.trace, "include the queue trace in the JSON");

  auto* bench = app.add_subcommand("bench", "time planners over repetitions");
  add_common(bench, f);
  bench->add_option("--reps", f.reps, "repetitions per planner")->check(CLI::PositiveNumber);
  bench->add_option("--out", f.out, "CSV report");

  auto* oracle = app.add_subcommand("oracle-check", "compare planners against brute force");
  add_common(oracle, f);

  auto* render = app.add_subcommand("render", "draw world and paths");
  add_common(render, f);
  render->add_option("--svg", f.svg, "output SVG")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (plan->parsed()) return cmd_plan(f);
    if (bench->parsed()) return cmd_bench(f);
    if (oracle->parsed()) return cmd_oracle_check(f);
    if (render->parsed()) return cmd_render(f);
  } catch (const ramp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ramp::ResourceAbort& e) {
    std::cerr << "aborted: " << e.what() << "\n";
    return kResource;
  } catch (const ramp::Unreachable& e) {
    std::cerr << "unreachable: " << e.what() << "\n";
    return kUnreachable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
