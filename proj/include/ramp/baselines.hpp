#pragma once

#include <utility>
#include <vector>

#include "ramp/cost.hpp"
#include "ramp/path_result.hpp"
#include "ramp/roadmap.hpp"

namespace ramp {

/// (risk time, total length), compared lexicographically.
struct LexCost {
  double risk_time = 0.0;
  double total_length = 0.0;

  friend auto operator<=>(const LexCost&, const LexCost&) = default;
};

struct PopRecord {
  VertexId vertex = kNoVertex;
  double cost = 0.0;
};

/// Shortest path by length, ignoring risk; ties broken by vertex id. The
/// breakdown reports the risk-aware cost of the returned path under `model`.
/// `pops`, when given, receives the finalization order.
PathResult dijkstra_shortest(const RefinedRoadmap& g, VertexId start, VertexId goal,
                             const CostModel& model = {}, std::vector<PopRecord>* pops = nullptr);

/// Path minimizing time spent in the risk zone, then length.
PathResult min_risk_path(const RefinedRoadmap& g, VertexId start, VertexId goal, const CostModel& model = {});

}  // namespace ramp
