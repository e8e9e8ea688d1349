#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ramp/geometry.hpp"

namespace ramp {

enum class ZoneLabel : std::uint8_t { Obstacle, Safe, Risk };

const char* to_string(ZoneLabel z);

/// Uniform cell decomposition. Cell (r, c) covers
/// [origin.x + c*cell_size, origin.x + (c+1)*cell_size] x [origin.y + r*cell_size, ...].
/// Row 0 is the first text row, so y grows downward when rendered.
struct CellGrid {
  int rows = 0;
  int cols = 0;
  double cell_size = 1.0;
  Point2 origin{};
  std::vector<ZoneLabel> cells;  // row-major

  ZoneLabel at(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c]; }
  ZoneLabel& at(int r, int c) { return cells[static_cast<std::size_t>(r) * cols + c]; }
  Point2 center(int r, int c) const {
    return {origin.x + (c + 0.5) * cell_size, origin.y + (r + 0.5) * cell_size};
  }
};

/// Obstacles and risk zones as simple polygons. Risk polygons are open sets,
/// obstacle polygons are open as well (free space is closed).
struct PolygonSet {
  Box bounds;
  std::vector<Polygon> obstacles;
  std::vector<Polygon> risk;
};

enum class CrossingDirection : std::uint8_t { SafeToRisk, RiskToSafe };

/// Safe/risk boundary crossing at `param` in (0, 1) along a directed segment.
struct Crossing {
  double param = 0.0;
  CrossingDirection direction = CrossingDirection::SafeToRisk;
};

/// Crossings closer than this (in segment parameter units) are merged.
inline constexpr double kCrossingMergeTolerance = 1e-9;

/// Immutable partition of the plane into obstacle, safe and risk regions.
class World {
 public:
  /// Validates dimensions, cell size and label counts.
  explicit World(CellGrid grid);
  /// Validates that risk polygons do not overlap obstacle polygons.
  explicit World(PolygonSet polys);

  bool is_grid() const { return std::holds_alternative<CellGrid>(rep_); }
  const CellGrid& grid() const;
  const PolygonSet& polygons() const;
  Box bounds() const;

  /// Throws OutOfBounds for points outside bounds().
  ZoneLabel classify(Point2 p) const;

  /// Throws CollisionError if the closed segment touches an obstacle.
  std::vector<Crossing> crossings(Point2 a, Point2 b) const;

  /// Zone of the open segment just after `a`. For a segment without
  /// crossings this is the zone of its whole interior.
  ZoneLabel leading_zone(Point2 a, Point2 b) const;

  /// Non-throwing collision test used while building roadmaps.
  bool segment_free(Point2 a, Point2 b) const;

 private:
  struct Profile {
    std::vector<double> breaks;      // 0, interior breakpoints..., 1
    std::vector<ZoneLabel> pieces;   // label of each open sub-interval
    bool collides = false;
  };
  Profile profile(Point2 a, Point2 b) const;

  std::variant<CellGrid, PolygonSet> rep_;
};

ZoneLabel classify_point(const World& world, Point2 p);
std::vector<Crossing> segment_crossings(const World& world, Point2 a, Point2 b);

/// Coastal-navigation world: a cell is Obstacle if its center lies in an
/// obstacle, Risk if the center is farther than `offset` from every obstacle,
/// Safe otherwise.
World risk_offset_world(const std::vector<Polygon>& obstacles, double offset, Box bounds,
                        double resolution);

/// Parses the ASCII grid format: header `grid <rows> <cols> <cell_size>` then
/// one line per row of '#', '.', '~'.
CellGrid parse_ascii_grid(std::string_view text, const std::string& source = "<grid>");
std::string format_ascii_grid(const CellGrid& grid);

}  // namespace ramp
