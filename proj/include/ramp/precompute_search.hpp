#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "ramp/cost.hpp"
#include "ramp/path_result.hpp"
#include "ramp/roadmap.hpp"

namespace ramp {

/// Risk-restricted traversal times between all pairs of border points,
/// indexed by position in RefinedRoadmap::border_ids().
class BorderTable {
 public:
  static constexpr double kUnreachable = std::numeric_limits<double>::infinity();

  BorderTable() = default;
  explicit BorderTable(std::vector<VertexId> borders);

  std::size_t size() const { return borders_.size(); }
  const std::vector<VertexId>& borders() const { return borders_; }
  double at(std::size_t i, std::size_t j) const { return times_[i * borders_.size() + j]; }
  double& at(std::size_t i, std::size_t j) { return times_[i * borders_.size() + j]; }
  std::size_t bytes() const { return times_.size() * sizeof(double); }

 private:
  std::vector<VertexId> borders_;
  std::vector<double> times_;
};

/// Shortest lengths from every border point over risk edges, never passing
/// through a non-risk vertex. Unreachable pairs hold infinity.
BorderTable risk_restricted_apsp(const RefinedRoadmap& g);

/// Vertex chain of the shortest risk-restricted path between two border
/// points, recomputed deterministically. Empty if none exists.
std::vector<VertexId> risk_restricted_path(const RefinedRoadmap& g, VertexId from, VertexId to);

struct AugmentedEdge {
  VertexId to = kNoVertex;
  double weight = 0.0;
  bool risk_traversal = false;
};

/// Safe vertices and border points connected by safe edges and by one
/// border-to-border edge per finite table entry, weighted exp(T) - 1.
struct AugmentedGraph {
  std::vector<std::vector<AugmentedEdge>> adjacency;  // indexed by refined vertex id
  std::vector<bool> in_graph;
  std::size_t vertex_count = 0;
  std::size_t safe_edge_count = 0;
  std::size_t border_edge_count = 0;  // undirected
};

AugmentedGraph build_augmented_graph(const RefinedRoadmap& g, const BorderTable& table,
                                     const CostModel& model = {});

struct PrecomputeOptions {
  CostModel cost;
  std::size_t memory_budget_bytes = std::size_t{2} << 30;
};

/// Upper bound on the bytes the border table and border edges will occupy.
std::size_t estimate_precompute_bytes(const RefinedRoadmap& g);

/// Precomputation-based planner. Endpoints must lie outside the risk zone
/// (UnsupportedQuery otherwise); throws ResourceAbort over the memory budget.
PathResult precompute_search(const RefinedRoadmap& g, VertexId start, VertexId goal,
                             const PrecomputeOptions& options = {});

}  // namespace ramp
