#pragma once

#include <cstddef>
#include <vector>

#include "ramp/cost.hpp"
#include "ramp/roadmap.hpp"

namespace ramp {

/// Largest refined roadmap the brute-force routines accept by default.
inline constexpr std::size_t kOracleVertexCap = 14;

using VertexPath = std::vector<VertexId>;

/// Every simple path from xs to u (depth-first order).
std::vector<VertexPath> enumerate_simple_paths(const RefinedRoadmap& g, VertexId xs, VertexId u,
                                               std::size_t max_vertices = kOracleVertexCap);

/// Every walk from xs to u that visits each non-risk vertex at most once and
/// each risk vertex at most once per risk excursion.
///
/// Simple paths are not enough: a walk can leave the risk zone through a
/// border point only reachable via a risk vertex, reset its exposure, and
/// cross that vertex again. Conversely, a walk that repeats a vertex inside
/// one excursion or repeats a non-risk vertex can drop the cycle without
/// raising its cost or final exposure, so these walks contain an optimum and
/// the full non-dominated frontier.
std::vector<VertexPath> enumerate_candidate_walks(const RefinedRoadmap& g, VertexId xs, VertexId u,
                                                  std::size_t max_vertices = kOracleVertexCap);

struct OracleOptimum {
  double cost = 0.0;
  VertexPath path;
};

/// Minimum of the cost functional over enumerate_candidate_walks. Throws
/// Unreachable when no walk exists.
OracleOptimum brute_force_optimum(const RefinedRoadmap& g, VertexId xs, VertexId xg, const CostModel& model = {},
                                  std::size_t max_vertices = kOracleVertexCap);

struct UsefulLabel {
  double cost = 0.0;
  double lambda = 0.0;
  VertexPath path;
};

/// Non-dominated (cost, exposure) labels of all candidate walks to a vertex,
/// sorted by cost.
struct UsefulSet {
  VertexId vertex = kNoVertex;
  std::vector<UsefulLabel> labels;
};

UsefulSet useful_set(const RefinedRoadmap& g, VertexId xs, VertexId u, const CostModel& model = {},
                     std::size_t max_vertices = kOracleVertexCap);

/// useful_set for every vertex from one enumeration, indexed by vertex id.
std::vector<UsefulSet> useful_sets(const RefinedRoadmap& g, VertexId xs, const CostModel& model = {},
                                   std::size_t max_vertices = kOracleVertexCap);

}  // namespace ramp
