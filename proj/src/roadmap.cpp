#include "ramp/roadmap.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "ramp/errors.hpp"

namespace ramp {

const char* to_string(VertexLabel l) {
  switch (l) {
    case VertexLabel::Safe: return "safe";
    case VertexLabel::Risk: return "risk";
    case VertexLabel::Border: return "border";
  }
  return "?";
}

VertexId Roadmap::add_vertex(Point2 p, ZoneLabel zone) {
  if (zone == ZoneLabel::Obstacle) throw InvalidParameter("roadmap vertices must be collision-free");
  points_.push_back(p);
  zones_.push_back(zone);
  adjacency_.emplace_back();
  return static_cast<VertexId>(points_.size() - 1);
}

EdgeId Roadmap::add_edge(VertexId u, VertexId v, double length, std::optional<ZoneLabel> zone) {
  if (u >= points_.size() || v >= points_.size()) throw InvalidParameter("edge endpoint out of range");
  if (u == v) throw InvalidParameter("self loops are not allowed");
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidParameter("edge lengths must be positive and finite");
  }
  if (zone == ZoneLabel::Obstacle) throw InvalidParameter("edge zone cannot be obstacle");
  if (find_edge(u, v)) throw InvalidParameter("duplicate edge");
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v, length, zone});
  adjacency_[u].push_back({v, id});
  adjacency_[v].push_back({u, id});
  return id;
}

std::optional<EdgeId> Roadmap::find_edge(VertexId u, VertexId v) const {
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const VertexId other = &a == &adjacency_[u] ? v : u;
  for (const auto& n : a) {
    if (n.to == other) return n.edge;
  }
  return std::nullopt;
}

VertexId Roadmap::nearest_vertex(Point2 p) const {
  VertexId best = kNoVertex;
  double best_d = std::numeric_limits<double>::infinity();
  for (VertexId v = 0; v < points_.size(); ++v) {
    const double d = distance(points_[v], p);
    if (d < best_d) {
      best_d = d;
      best = v;
    }
  }
  return best;
}

VertexId RefinedRoadmap::add_vertex(Point2 p, VertexLabel label) {
  points_.push_back(p);
  labels_.push_back(label);
  adjacency_.emplace_back();
  return static_cast<VertexId>(points_.size() - 1);
}

void RefinedRoadmap::add_edge(VertexId u, VertexId v, double length, ZoneLabel zone, EdgeId original) {
  if (zone == ZoneLabel::Obstacle) throw InternalError("refined edge cannot lie in an obstacle");
  if (zone == ZoneLabel::Safe && (is_risk(u) || is_risk(v))) {
    throw InternalError("safe edge incident to a risk vertex");
  }
  if (!(length > 0.0)) throw InternalError("refined edge of non-positive length");
  adjacency_[u].push_back({v, length, zone, original});
  adjacency_[v].push_back({u, length, zone, original});
  ++edge_count_;
}

void RefinedRoadmap::finalize(std::size_t original_vertices, std::size_t crossings) {
  original_vertices_ = original_vertices;
  crossings_ = crossings;
  border_ids_.clear();
  border_index_.assign(points_.size(), kNoVertex);
  for (VertexId v = 0; v < points_.size(); ++v) {
    if (is_risk(v)) continue;
    const auto& adj = adjacency_[v];
    const bool touches_risk =
        std::any_of(adj.begin(), adj.end(), [](const RefinedEdge& e) { return e.zone == ZoneLabel::Risk; });
    if (touches_risk || labels_[v] == VertexLabel::Border) {
      border_index_[v] = static_cast<VertexId>(border_ids_.size());
      border_ids_.push_back(v);
      labels_[v] = VertexLabel::Border;
    }
  }
}

const RefinedEdge* RefinedRoadmap::find_edge(VertexId u, VertexId v) const {
  const RefinedEdge* best = nullptr;
  for (const auto& e : adjacency_[u]) {
    if (e.to == v && (!best || e.length < best->length)) best = &e;
  }
  return best;
}

namespace {

void add_grid_edge(Roadmap& g, const World& world, VertexId a, VertexId b, double length) {
  if (world.segment_free(g.point(a), g.point(b))) g.add_edge(a, b, length);
}

}  // namespace

Roadmap build_grid_roadmap(const World& world, Connectivity connectivity) {
  const CellGrid& grid = world.grid();
  Roadmap g;
  std::vector<VertexId> id(grid.cells.size(), kNoVertex);
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      const ZoneLabel z = grid.at(r, c);
      if (z == ZoneLabel::Obstacle) continue;
      id[static_cast<std::size_t>(r) * grid.cols + c] = g.add_vertex(grid.center(r, c), z);
    }
  }
  const double straight = grid.cell_size;
  const double diagonal = grid.cell_size * std::sqrt(2.0);
  auto vid = [&](int r, int c) -> VertexId {
    if (r < 0 || c < 0 || r >= grid.rows || c >= grid.cols) return kNoVertex;
    return id[static_cast<std::size_t>(r) * grid.cols + c];
  };
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      const VertexId a = vid(r, c);
      if (a == kNoVertex) continue;
      if (VertexId b = vid(r, c + 1); b != kNoVertex) add_grid_edge(g, world, a, b, straight);
      if (VertexId b = vid(r + 1, c); b != kNoVertex) add_grid_edge(g, world, a, b, straight);
      if (connectivity == Connectivity::Eight) {
        if (VertexId b = vid(r + 1, c + 1); b != kNoVertex) add_grid_edge(g, world, a, b, diagonal);
        if (VertexId b = vid(r + 1, c - 1); b != kNoVertex) add_grid_edge(g, world, a, b, diagonal);
      }
    }
  }
  return g;
}

VertexId grid_vertex(const World& world, int r, int c) {
  const CellGrid& grid = world.grid();
  if (r < 0 || c < 0 || r >= grid.rows || c >= grid.cols) throw OutOfBounds("cell outside the grid");
  if (grid.at(r, c) == ZoneLabel::Obstacle) return kNoVertex;
  const std::size_t flat = static_cast<std::size_t>(r) * grid.cols + c;
  const auto free_before = std::count_if(grid.cells.begin(), grid.cells.begin() + static_cast<std::ptrdiff_t>(flat),
                                         [](ZoneLabel z) { return z != ZoneLabel::Obstacle; });
  return static_cast<VertexId>(free_before);
}

double halton(std::uint64_t index, std::uint32_t base) {
  double f = 1.0;
  double result = 0.0;
  while (index > 0) {
    f /= base;
    result += f * static_cast<double>(index % base);
    index /= base;
  }
  return result;
}

Roadmap build_halton_roadmap(const World& world, std::size_t n, double radius, HaltonOffsets offsets) {
  if (n < 2) throw InvalidParameter("halton roadmap needs n >= 2");
  if (!(radius > 0.0)) throw InvalidParameter("connection radius must be positive");
  const Box box = world.bounds();
  Roadmap g;
  for (std::size_t i = 1; i <= n; ++i) {
    const Point2 p{box.min.x + box.width() * halton(i + offsets.base2, 2),
                   box.min.y + box.height() * halton(i + offsets.base3, 3)};
    const ZoneLabel z = world.classify(p);
    if (z != ZoneLabel::Obstacle) g.add_vertex(p, z);
  }
  if (g.vertex_count() == 0) throw EmptyRoadmap("no collision-free halton samples");

  // bucket grid with cell side = radius
  const auto cols = static_cast<std::int64_t>(std::max(1.0, std::ceil(box.width() / radius)));
  const auto rows = static_cast<std::int64_t>(std::max(1.0, std::ceil(box.height() / radius)));
  auto bucket_of = [&](Point2 p) {
    const auto bx = std::clamp<std::int64_t>(static_cast<std::int64_t>((p.x - box.min.x) / radius), 0, cols - 1);
    const auto by = std::clamp<std::int64_t>(static_cast<std::int64_t>((p.y - box.min.y) / radius), 0, rows - 1);
    return std::pair{bx, by};
  };
  std::unordered_map<std::int64_t, std::vector<VertexId>> buckets;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto [bx, by] = bucket_of(g.point(v));
    buckets[by * cols + bx].push_back(v);
  }
  std::vector<VertexId> candidates;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const Point2 pu = g.point(u);
    const auto [bx, by] = bucket_of(pu);
    candidates.clear();
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      for (std::int64_t dx = -1; dx <= 1; ++dx) {
        const std::int64_t x = bx + dx, y = by + dy;
        if (x < 0 || y < 0 || x >= cols || y >= rows) continue;
        auto it = buckets.find(y * cols + x);
        if (it == buckets.end()) continue;
        for (VertexId v : it->second) {
          if (v > u) candidates.push_back(v);
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (VertexId v : candidates) {
      const double d = distance(pu, g.point(v));
      if (d > radius || d == 0.0) continue;
      if (world.segment_free(pu, g.point(v))) g.add_edge(u, v, d);
    }
  }
  return g;
}

namespace {

VertexLabel vertex_label(ZoneLabel z) { return z == ZoneLabel::Risk ? VertexLabel::Risk : VertexLabel::Safe; }

RefinedRoadmap copy_vertices(const Roadmap& g) {
  RefinedRoadmap out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.point(v), vertex_label(g.zone(v)));
  return out;
}

}  // namespace

RefinedRoadmap refine(const Roadmap& g, const World& world) {
  RefinedRoadmap out = copy_vertices(g);
  std::size_t crossings_total = 0;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const RoadmapEdge& e = g.edge(id);
    const Point2 a = g.point(e.u);
    const Point2 b = g.point(e.v);
    const auto crossings = world.crossings(a, b);
    crossings_total += crossings.size();
    if (crossings.empty()) {
      out.add_edge(e.u, e.v, e.length, world.leading_zone(a, b), id);
      continue;
    }
    ZoneLabel zone = crossings.front().direction == CrossingDirection::SafeToRisk ? ZoneLabel::Safe
                                                                                   : ZoneLabel::Risk;
    VertexId prev = e.u;
    double prev_t = 0.0;
    for (const Crossing& c : crossings) {
      const VertexId border = out.add_vertex(lerp(a, b, c.param), VertexLabel::Border);
      out.add_edge(prev, border, (c.param - prev_t) * e.length, zone, id);
      prev = border;
      prev_t = c.param;
      zone = c.direction == CrossingDirection::SafeToRisk ? ZoneLabel::Risk : ZoneLabel::Safe;
    }
    out.add_edge(prev, e.v, (1.0 - prev_t) * e.length, zone, id);
  }
  out.finalize(g.vertex_count(), crossings_total);
  return out;
}

RefinedRoadmap refine(const Roadmap& g) {
  RefinedRoadmap out = copy_vertices(g);
  std::size_t crossings_total = 0;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const RoadmapEdge& e = g.edge(id);
    const bool risky_end = g.zone(e.u) == ZoneLabel::Risk || g.zone(e.v) == ZoneLabel::Risk;
    if (e.zone == ZoneLabel::Safe && risky_end) {
      throw InvalidParameter("edge marked safe touches a risk vertex");
    }
    const ZoneLabel zone = (risky_end || e.zone == ZoneLabel::Risk) ? ZoneLabel::Risk : ZoneLabel::Safe;
    if (zone == ZoneLabel::Risk) {
      crossings_total += (g.zone(e.u) != ZoneLabel::Risk) + (g.zone(e.v) != ZoneLabel::Risk);
    }
    out.add_edge(e.u, e.v, e.length, zone, id);
  }
  out.finalize(g.vertex_count(), crossings_total);
  return out;
}

}  // namespace ramp
