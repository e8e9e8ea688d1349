#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ramp/geometry.hpp"
#include "ramp/world.hpp"

namespace ramp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct RoadmapEdge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  double length = 0.0;
  /// Zone override for graphs without geometry. Ignored by refine(g, world).
  std::optional<ZoneLabel> zone;
};

/// Undirected embedded graph whose vertices are Safe or Risk points.
class Roadmap {
 public:
  struct Adjacent {
    VertexId to;
    EdgeId edge;
  };

  VertexId add_vertex(Point2 p, ZoneLabel zone);
  /// Rejects self loops, duplicates, and non-positive or non-finite lengths.
  EdgeId add_edge(VertexId u, VertexId v, double length, std::optional<ZoneLabel> zone = std::nullopt);
  /// Edge with length equal to the Euclidean distance of the endpoints.
  EdgeId add_edge(VertexId u, VertexId v) { return add_edge(u, v, distance(points_[u], points_[v])); }

  std::size_t vertex_count() const { return points_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  Point2 point(VertexId v) const { return points_[v]; }
  ZoneLabel zone(VertexId v) const { return zones_[v]; }
  const RoadmapEdge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<RoadmapEdge>& edges() const { return edges_; }
  const std::vector<Adjacent>& neighbors(VertexId v) const { return adjacency_[v]; }
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  /// Closest vertex to p; ties broken by lower id.
  VertexId nearest_vertex(Point2 p) const;

 private:
  std::vector<Point2> points_;
  std::vector<ZoneLabel> zones_;
  std::vector<RoadmapEdge> edges_;
  std::vector<std::vector<Adjacent>> adjacency_;
};

enum class VertexLabel : std::uint8_t { Safe, Risk, Border };

const char* to_string(VertexLabel l);

struct RefinedEdge {
  VertexId to = kNoVertex;
  double length = 0.0;
  ZoneLabel zone = ZoneLabel::Safe;  // Safe or Risk over the whole edge
  EdgeId original = 0;
};

/// Roadmap with border vertices inserted so that every edge is zone-pure.
/// Original vertex ids are preserved; border vertices follow in
/// (edge id, crossing param) order.
class RefinedRoadmap {
 public:
  std::size_t vertex_count() const { return points_.size(); }
  std::size_t original_vertex_count() const { return original_vertices_; }
  std::size_t edge_count() const { return edge_count_; }
  Point2 point(VertexId v) const { return points_[v]; }
  VertexLabel label(VertexId v) const { return labels_[v]; }
  bool is_risk(VertexId v) const { return labels_[v] == VertexLabel::Risk; }
  const std::vector<RefinedEdge>& neighbors(VertexId v) const { return adjacency_[v]; }
  const RefinedEdge* find_edge(VertexId u, VertexId v) const;

  /// Border points B: non-risk vertices incident to a risk edge, ascending.
  const std::vector<VertexId>& border_ids() const { return border_ids_; }
  bool is_border(VertexId v) const { return border_index_[v] != kNoVertex; }
  /// Index of v in border_ids(), or kNoVertex.
  VertexId border_index(VertexId v) const { return border_index_[v]; }
  /// n_B, the number of border points.
  std::size_t border_count() const { return border_ids_.size(); }
  /// Number of (edge, crossing) incidences found while refining.
  std::size_t crossing_count() const { return crossings_; }

  /// Builders used by refine(); kept public for hand-made fixtures.
  VertexId add_vertex(Point2 p, VertexLabel label);
  void add_edge(VertexId u, VertexId v, double length, ZoneLabel zone, EdgeId original);
  void finalize(std::size_t original_vertices, std::size_t crossings);

 private:
  std::vector<Point2> points_;
  std::vector<VertexLabel> labels_;
  std::vector<std::vector<RefinedEdge>> adjacency_;
  std::vector<VertexId> border_ids_;
  std::vector<VertexId> border_index_;
  std::size_t original_vertices_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t crossings_ = 0;
};

enum class Connectivity { Four = 4, Eight = 8 };

/// One vertex per free cell center (row-major) with 4- or 8-neighbor edges.
Roadmap build_grid_roadmap(const World& world, Connectivity connectivity);

/// Vertex id of the cell (r, c) in a grid roadmap of `world`, or kNoVertex.
VertexId grid_vertex(const World& world, int r, int c);

struct HaltonOffsets {
  std::uint64_t base2 = 0;
  std::uint64_t base3 = 0;
};

double halton(std::uint64_t index, std::uint32_t base);

/// Radius-connected roadmap over the first n Halton points in the world box.
Roadmap build_halton_roadmap(const World& world, std::size_t n, double radius,
                             HaltonOffsets offsets = {});

/// Subdivides every edge at its safe/risk crossings.
RefinedRoadmap refine(const Roadmap& g, const World& world);

/// Refinement for graphs without geometry: an edge is Risk when either
/// endpoint is Risk (or its zone override says so). The border point of a
/// Safe-Risk edge coincides with its Safe endpoint.
RefinedRoadmap refine(const Roadmap& g);

}  // namespace ramp
