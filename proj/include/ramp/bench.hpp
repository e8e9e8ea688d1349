#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ramp/path_result.hpp"
#include "ramp/rasp_search.hpp"
#include "ramp/scenario.hpp"

namespace ramp {

/// Runs one planner on a built scenario. A* uses the straight-line heuristic
/// and throws InvalidParameter when it is not consistent on the roadmap.
/// `trace` receives the queue events of the incremental and A* planners.
PathResult run_planner(const BuiltScenario& b, Algorithm algorithm, const PlannerOptions& options,
                       std::vector<TraceRecord>* trace = nullptr);

struct BenchRow {
  Algorithm algorithm = Algorithm::Incremental;
  bool dnf = false;  // precompute exceeded its memory budget
  std::string note;
  std::vector<double> seconds;
  double mean = 0.0;
  double stddev = 0.0;
  double apsp_share = 0.0;  // precompute only: APSP time / wall time
  std::size_t table_bytes = 0;
  double cost = 0.0;
  double length = 0.0;
  double risk_time = 0.0;
};

struct BenchReport {
  std::string scenario;
  std::size_t reps = 0;
  std::size_t vertices = 0;
  std::size_t border_points = 0;
  std::vector<BenchRow> rows;
};

double mean(const std::vector<double>& xs);
/// Sample standard deviation; 0 for fewer than two samples.
double stddev(const std::vector<double>& xs);

/// Times each algorithm `reps` times, sequentially.
BenchReport run_bench(const Scenario& s, const BuiltScenario& b, const std::vector<Algorithm>& algorithms,
                      std::size_t reps);

std::string bench_csv(const BenchReport& r);
std::string bench_table(const BenchReport& r);

}  // namespace ramp
