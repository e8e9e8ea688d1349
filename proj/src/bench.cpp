#include "ramp/bench.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "ramp/baselines.hpp"
#include "ramp/errors.hpp"
#include "ramp/precompute_search.hpp"
#include "ramp/rasp_search.hpp"

namespace ramp {

PathResult run_planner(const BuiltScenario& b, Algorithm algorithm, const PlannerOptions& options,
                       std::vector<TraceRecord>* trace) {
  CostModel cost;
  cost.alpha = options.alpha;
  SearchOptions so;
  so.cost = cost;
  so.domination_pruning = options.pruning;
  so.capture_trace = trace != nullptr;
  switch (algorithm) {
    case Algorithm::Incremental:
    case Algorithm::AStar: {
      Heuristic h;
      if (algorithm == Algorithm::AStar) {
        h = euclidean_heuristic(b.refined, b.goal);
        if (!heuristic_is_consistent(b.refined, h, b.goal)) {
          throw InvalidParameter("straight-line heuristic is not consistent on this roadmap");
        }
      }
      RaspSearch search(b.refined, so);
      PathResult r = search.run(b.start, b.goal, h);
      if (trace) *trace = search.trace();
      return r;
    }
    case Algorithm::Precompute: {
      PrecomputeOptions po;
      po.cost = cost;
      po.memory_budget_bytes = options.memory_budget;
      return precompute_search(b.refined, b.start, b.goal, po);
    }
    case Algorithm::Dijkstra:
      return dijkstra_shortest(b.refined, b.start, b.goal, cost);
    case Algorithm::MinRisk:
      return min_risk_path(b.refined, b.start, b.goal, cost);
  }
  throw InternalError("unknown algorithm");
}

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double stddev(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

BenchReport run_bench(const Scenario& s, const BuiltScenario& b, const std::vector<Algorithm>& algorithms,
                      std::size_t reps) {
  if (reps == 0) throw InvalidParameter("repetitions must be >= 1");
  BenchReport report;
  report.scenario = s.name;
  report.reps = reps;
  report.vertices = b.refined.vertex_count();
  report.border_points = b.refined.border_count();
  for (Algorithm a : algorithms) {
    BenchRow row;
    row.algorithm = a;
    std::vector<double> shares;
    for (std::size_t i = 0; i < reps; ++i) {
      PathResult r;
      try {
        r = run_planner(b, a, s.options);
      } catch (const ResourceAbort& e) {
        row.dnf = true;
        row.note = e.what();
        break;
      }
      row.seconds.push_back(r.stats.wall_seconds);
      if (a == Algorithm::Precompute && r.stats.wall_seconds > 0.0) {
        shares.push_back(r.stats.apsp_seconds / r.stats.wall_seconds);
        row.table_bytes = r.stats.table_bytes;
      }
      if (r.found()) {
        row.cost = r.cost();
        row.length = r.length();
        row.risk_time = r.breakdown.risk_time();
      } else {
        row.note = "unreachable";
      }
    }
    row.mean = mean(row.seconds);
    row.stddev = stddev(row.seconds);
    row.apsp_share = mean(shares);
    report.rows.push_back(row);
  }
  return report;
}

std::string bench_csv(const BenchReport& r) {
  std::string out = "scenario,algorithm,reps,mean_s,stddev_s,apsp_share,table_bytes,cost,length,risk_time,status\n";
  for (const auto& row : r.rows) {
    if (row.dnf) {
      out += fmt::format("{},{},{},,,,,,,,DNF\n", r.scenario, to_string(row.algorithm), r.reps);
      continue;
    }
    out += fmt::format("{},{},{},{:.9f},{:.9f},{:.6f},{},{:.12g},{:.12g},{:.12g},{}\n", r.scenario,
                       to_string(row.algorithm), r.reps, row.mean, row.stddev, row.apsp_share, row.table_bytes,
                       row.cost, row.length, row.risk_time, row.note.empty() ? "ok" : row.note);
  }
  return out;
}

std::string bench_table(const BenchReport& r) {
  std::string out = fmt::format("{} ({} vertices, {} border points, {} reps)\n", r.scenario, r.vertices,
                                r.border_points, r.reps);
  out += fmt::format("{:<12} {:>22} {:>10} {:>12} {:>12} {:>10} {:>10}\n", "algorithm", "time [s]", "apsp",
                     "table", "cost", "length", "risk");
  for (const auto& row : r.rows) {
    if (row.dnf) {
      out += fmt::format("{:<12} {:>22}\n", to_string(row.algorithm), "---");
      continue;
    }
    const std::string time = fmt::format("{:.6f} +- {:.6f}", row.mean, row.stddev);
    const bool pre = row.algorithm == Algorithm::Precompute;
    out += fmt::format("{:<12} {:>22} {:>10} {:>12} {:>12.4f} {:>10.4f} {:>10.4f}\n", to_string(row.algorithm),
                       time, pre ? fmt::format("{:.1f}%", 100.0 * row.apsp_share) : "",
                       pre ? fmt::format("{} B", row.table_bytes) : "", row.cost, row.length, row.risk_time);
  }
  return out;
}

}  // namespace ramp
