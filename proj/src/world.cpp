#include "ramp/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ramp/errors.hpp"

namespace ramp {

const char* to_string(ZoneLabel z) {
  switch (z) {
    case ZoneLabel::Obstacle: return "obstacle";
    case ZoneLabel::Safe: return "safe";
    case ZoneLabel::Risk: return "risk";
  }
  return "?";
}

namespace {

constexpr double kGridLineEps = 1e-9;

// Indices of the closed cells (along one axis) containing coordinate f, in
// cell units. Returns one index, or two when f sits on a shared line.
int axis_cells(double f, int count, int out[2]) {
  const double nearest = std::round(f);
  if (std::abs(f - nearest) <= kGridLineEps) {
    const int k = static_cast<int>(nearest);
    int n = 0;
    if (k - 1 >= 0 && k - 1 < count) out[n++] = k - 1;
    if (k >= 0 && k < count) out[n++] = k;
    return n;
  }
  const int k = static_cast<int>(std::floor(f));
  if (k < 0 || k >= count) return 0;
  out[0] = k;
  return 1;
}

struct CellLabels {
  bool any_obstacle = false;
  bool all_obstacle = true;
  bool all_risk = true;
  int count = 0;
};

CellLabels cells_at(const CellGrid& g, Point2 p) {
  int rs[2], cs[2];
  const int nr = axis_cells((p.y - g.origin.y) / g.cell_size, g.rows, rs);
  const int nc = axis_cells((p.x - g.origin.x) / g.cell_size, g.cols, cs);
  CellLabels out;
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) {
      const ZoneLabel z = g.at(rs[i], cs[j]);
      ++out.count;
      out.any_obstacle |= z == ZoneLabel::Obstacle;
      out.all_obstacle &= z == ZoneLabel::Obstacle;
      out.all_risk &= z == ZoneLabel::Risk;
    }
  }
  return out;
}

ZoneLabel label_from_cells(const CellLabels& c) {
  if (c.all_obstacle) return ZoneLabel::Obstacle;
  if (c.all_risk) return ZoneLabel::Risk;
  return ZoneLabel::Safe;
}

ZoneLabel classify_polygons(const PolygonSet& ps, Point2 p) {
  for (const auto& o : ps.obstacles) {
    if (locate_in_polygon(o, p) > 0) return ZoneLabel::Obstacle;
  }
  for (const auto& r : ps.risk) {
    if (locate_in_polygon(r, p) > 0) return ZoneLabel::Risk;
  }
  return ZoneLabel::Safe;
}

bool touches_obstacle(const PolygonSet& ps, Point2 p) {
  for (const auto& o : ps.obstacles) {
    if (locate_in_polygon(o, p) >= 0) return true;
  }
  return false;
}

void add_axis_breaks(double fa, double fb, std::vector<double>& out) {
  if (fa == fb) return;
  const double lo = std::min(fa, fb);
  const double hi = std::max(fa, fb);
  for (double k = std::floor(lo) + 1.0; k < hi; k += 1.0) {
    out.push_back((k - fa) / (fb - fa));
  }
}

std::vector<double> finalize_breaks(std::vector<double> interior) {
  std::vector<double> kept;
  kept.reserve(interior.size() + 2);
  kept.push_back(0.0);
  std::sort(interior.begin(), interior.end());
  for (double t : interior) {
    if (t <= kCrossingMergeTolerance || t >= 1.0 - kCrossingMergeTolerance) continue;
    if (t - kept.back() <= kCrossingMergeTolerance) continue;
    kept.push_back(t);
  }
  if (kept.size() > 1 && 1.0 - kept.back() <= kCrossingMergeTolerance) kept.pop_back();
  kept.push_back(1.0);
  return kept;
}

bool polygons_overlap(const Polygon& a, const Polygon& b) {
  for (const auto& p : a.ring) {
    if (locate_in_polygon(b, p) > 0) return true;
  }
  for (const auto& p : b.ring) {
    if (locate_in_polygon(a, p) > 0) return true;
  }
  const auto& ra = a.ring;
  const auto& rb = b.ring;
  for (std::size_t i = 0, j = ra.size() - 1; i < ra.size(); j = i++) {
    for (std::size_t k = 0, l = rb.size() - 1; k < rb.size(); l = k++) {
      const auto t = segment_intersection_param(ra[j], ra[i], rb[l], rb[k]);
      const auto u = segment_intersection_param(rb[l], rb[k], ra[j], ra[i]);
      if (t && u && *t > 1e-9 && *t < 1 - 1e-9 && *u > 1e-9 && *u < 1 - 1e-9) return true;
    }
  }
  return false;
}

}  // namespace

World::World(CellGrid grid) {
  if (grid.rows < 1 || grid.cols < 1) throw InvalidParameter("grid dimensions must be >= 1");
  if (!(grid.cell_size > 0.0) || !std::isfinite(grid.cell_size)) {
    throw InvalidParameter("cell_size must be positive");
  }
  if (grid.cells.size() != static_cast<std::size_t>(grid.rows) * grid.cols) {
    throw InvalidParameter("grid cell count does not match rows*cols");
  }
  rep_ = std::move(grid);
}

World::World(PolygonSet polys) {
  for (const auto& poly : polys.obstacles) {
    if (poly.ring.size() < 3) throw InvalidParameter("obstacle polygon needs at least 3 vertices");
  }
  for (const auto& poly : polys.risk) {
    if (poly.ring.size() < 3) throw InvalidParameter("risk polygon needs at least 3 vertices");
    for (const auto& obs : polys.obstacles) {
      if (polygons_overlap(poly, obs)) throw InvalidParameter("risk polygon overlaps an obstacle");
    }
  }
  if (!(polys.bounds.width() > 0.0) || !(polys.bounds.height() > 0.0)) {
    std::vector<Polygon> all = polys.obstacles;
    all.insert(all.end(), polys.risk.begin(), polys.risk.end());
    polys.bounds = bounding_box(all);
    if (!(polys.bounds.width() > 0.0) || !(polys.bounds.height() > 0.0)) {
      throw InvalidParameter("polygon world needs positive-area bounds");
    }
  }
  rep_ = std::move(polys);
}

const CellGrid& World::grid() const {
  if (const auto* g = std::get_if<CellGrid>(&rep_)) return *g;
  throw InvalidParameter("world is not a cell grid");
}

const PolygonSet& World::polygons() const {
  if (const auto* p = std::get_if<PolygonSet>(&rep_)) return *p;
  throw InvalidParameter("world is not a polygon set");
}

Box World::bounds() const {
  if (const auto* g = std::get_if<CellGrid>(&rep_)) {
    return {g->origin, {g->origin.x + g->cols * g->cell_size, g->origin.y + g->rows * g->cell_size}};
  }
  return std::get<PolygonSet>(rep_).bounds;
}

ZoneLabel World::classify(Point2 p) const {
  const Box b = bounds();
  const double slack = 1e-12 * std::max({1.0, b.width(), b.height()});
  if (!(p.x >= b.min.x - slack && p.x <= b.max.x + slack && p.y >= b.min.y - slack &&
        p.y <= b.max.y + slack)) {
    std::ostringstream os;
    os << "point (" << p.x << ", " << p.y << ") lies outside the world";
    throw OutOfBounds(os.str());
  }
  if (const auto* g = std::get_if<CellGrid>(&rep_)) {
    Point2 q{std::clamp(p.x, b.min.x, b.max.x), std::clamp(p.y, b.min.y, b.max.y)};
    return label_from_cells(cells_at(*g, q));
  }
  return classify_polygons(std::get<PolygonSet>(rep_), p);
}

World::Profile World::profile(Point2 a, Point2 b) const {
  Profile out;
  std::vector<double> interior;
  if (const auto* g = std::get_if<CellGrid>(&rep_)) {
    const double s = g->cell_size;
    add_axis_breaks((a.x - g->origin.x) / s, (b.x - g->origin.x) / s, interior);
    add_axis_breaks((a.y - g->origin.y) / s, (b.y - g->origin.y) / s, interior);
    out.breaks = finalize_breaks(std::move(interior));
    // supercover: every closed cell met by the segment must be free
    for (double t : out.breaks) {
      if (cells_at(*g, lerp(a, b, t)).any_obstacle) out.collides = true;
    }
    for (std::size_t i = 0; i + 1 < out.breaks.size(); ++i) {
      const auto cells = cells_at(*g, lerp(a, b, 0.5 * (out.breaks[i] + out.breaks[i + 1])));
      out.collides |= cells.any_obstacle;
      out.pieces.push_back(label_from_cells(cells));
    }
    return out;
  }
  const auto& ps = std::get<PolygonSet>(rep_);
  auto collect = [&](const std::vector<Polygon>& polys, bool obstacle) {
    for (const auto& poly : polys) {
      const auto& r = poly.ring;
      for (std::size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) {
        if (auto t = segment_intersection_param(a, b, r[j], r[i])) {
          interior.push_back(*t);
          if (obstacle) out.collides = true;
        }
      }
    }
  };
  collect(ps.obstacles, true);
  collect(ps.risk, false);
  out.breaks = finalize_breaks(std::move(interior));
  if (touches_obstacle(ps, a) || touches_obstacle(ps, b)) out.collides = true;
  for (std::size_t i = 0; i + 1 < out.breaks.size(); ++i) {
    const ZoneLabel z = classify_polygons(ps, lerp(a, b, 0.5 * (out.breaks[i] + out.breaks[i + 1])));
    out.collides |= z == ZoneLabel::Obstacle;
    out.pieces.push_back(z);
  }
  return out;
}

std::vector<Crossing> World::crossings(Point2 a, Point2 b) const {
  classify(a);
  classify(b);
  const Profile prof = profile(a, b);
  if (prof.collides) throw CollisionError("segment touches an obstacle");
  std::vector<Crossing> out;
  for (std::size_t i = 1; i < prof.pieces.size(); ++i) {
    if (prof.pieces[i] == prof.pieces[i - 1]) continue;
    out.push_back({prof.breaks[i], prof.pieces[i] == ZoneLabel::Risk ? CrossingDirection::SafeToRisk
                                                                      : CrossingDirection::RiskToSafe});
  }
  return out;
}

ZoneLabel World::leading_zone(Point2 a, Point2 b) const {
  const Profile prof = profile(a, b);
  if (prof.collides) throw CollisionError("segment touches an obstacle");
  return prof.pieces.front();
}

bool World::segment_free(Point2 a, Point2 b) const { return !profile(a, b).collides; }

ZoneLabel classify_point(const World& world, Point2 p) { return world.classify(p); }

std::vector<Crossing> segment_crossings(const World& world, Point2 a, Point2 b) {
  return world.crossings(a, b);
}

World risk_offset_world(const std::vector<Polygon>& obstacles, double offset, Box bounds,
                        double resolution) {
  if (!(offset > 0.0)) throw InvalidParameter("risk offset must be positive");
  if (!(resolution > 0.0)) throw InvalidParameter("grid resolution must be positive");
  if (!(bounds.width() > 0.0) || !(bounds.height() > 0.0)) {
    throw InvalidParameter("risk offset world needs positive-area bounds");
  }
  CellGrid g;
  g.cell_size = resolution;
  g.origin = bounds.min;
  g.cols = std::max(1, static_cast<int>(std::ceil(bounds.width() / resolution - 1e-9)));
  g.rows = std::max(1, static_cast<int>(std::ceil(bounds.height() / resolution - 1e-9)));
  g.cells.assign(static_cast<std::size_t>(g.rows) * g.cols, ZoneLabel::Safe);
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      const Point2 p = g.center(r, c);
      double nearest = std::numeric_limits<double>::infinity();
      bool inside = false;
      for (const auto& o : obstacles) {
        if (locate_in_polygon(o, p) >= 0) {
          inside = true;
          break;
        }
        nearest = std::min(nearest, distance_to_polygon(o, p));
      }
      g.at(r, c) = inside ? ZoneLabel::Obstacle : (nearest > offset ? ZoneLabel::Risk : ZoneLabel::Safe);
    }
  }
  return World(std::move(g));
}

CellGrid parse_ascii_grid(std::string_view text, const std::string& source) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(source, 1, 1, "empty grid document");

  CellGrid g;
  {
    std::istringstream header{std::string(lines[0])};
    std::string keyword;
    if (!(header >> keyword) || keyword != "grid") {
      throw ParseError(source, 1, 1, "expected header 'grid <rows> <cols> <cell_size>'");
    }
    if (!(header >> g.rows >> g.cols >> g.cell_size)) {
      throw ParseError(source, 1, 6, "malformed grid header");
    }
    std::string extra;
    if (header >> extra) throw ParseError(source, 1, lines[0].size(), "trailing text in header");
    if (g.rows < 1 || g.cols < 1) throw ParseError(source, 1, 6, "grid dimensions must be >= 1");
    if (!(g.cell_size > 0.0)) throw ParseError(source, 1, 6, "cell_size must be positive");
  }
  if (lines.size() - 1 != static_cast<std::size_t>(g.rows)) {
    throw ParseError(source, lines.size(), 1,
                     "expected " + std::to_string(g.rows) + " rows, found " +
                         std::to_string(lines.size() - 1));
  }
  g.cells.reserve(static_cast<std::size_t>(g.rows) * g.cols);
  for (int r = 0; r < g.rows; ++r) {
    const std::string_view row = lines[r + 1];
    if (row.size() != static_cast<std::size_t>(g.cols)) {
      throw ParseError(source, r + 2, std::min(row.size(), static_cast<std::size_t>(g.cols)) + 1,
                       "expected " + std::to_string(g.cols) + " columns");
    }
    for (int c = 0; c < g.cols; ++c) {
      switch (row[c]) {
        case '#': g.cells.push_back(ZoneLabel::Obstacle); break;
        case '.': g.cells.push_back(ZoneLabel::Safe); break;
        case '~': g.cells.push_back(ZoneLabel::Risk); break;
        default:
          throw ParseError(source, r + 2, c + 1, std::string("unexpected cell character '") + row[c] + "'");
      }
    }
  }
  return g;
}

std::string format_ascii_grid(const CellGrid& g) {
  std::ostringstream os;
  os.precision(17);
  os << "grid " << g.rows << ' ' << g.cols << ' ' << g.cell_size << '\n';
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      switch (g.at(r, c)) {
        case ZoneLabel::Obstacle: os << '#'; break;
        case ZoneLabel::Safe: os << '.'; break;
        case ZoneLabel::Risk: os << '~'; break;
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ramp
