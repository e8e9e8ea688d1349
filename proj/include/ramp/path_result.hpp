#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ramp/cost.hpp"
#include "ramp/roadmap.hpp"

namespace ramp {

enum class Algorithm { Incremental, AStar, Precompute, Dijkstra, MinRisk };

const char* to_string(Algorithm a);
/// Accepts incremental, astar, precompute, dijkstra, minrisk.
Algorithm parse_algorithm(std::string_view name);

enum class SearchStatus { Found, Unreachable };

struct SearchStats {
  std::size_t expansions = 0;      // entries popped and expanded
  std::size_t pushes = 0;
  std::size_t queue_peak = 0;
  std::size_t live_channels_peak = 0;  // max live channels at any single vertex
  double wall_seconds = 0.0;
  // precompute_search only
  double apsp_seconds = 0.0;
  std::size_t table_bytes = 0;
  std::size_t border_edges = 0;
};

struct PathResult {
  Algorithm algorithm = Algorithm::Incremental;
  SearchStatus status = SearchStatus::Unreachable;
  std::vector<VertexId> path;  // refined-roadmap vertex ids, start first
  CostBreakdown breakdown;
  SearchStats stats;

  bool found() const { return status == SearchStatus::Found; }
  double cost() const { return breakdown.total_cost; }
  double length() const { return breakdown.total_time; }
};

}  // namespace ramp
