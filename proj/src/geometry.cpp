#include "ramp/geometry.hpp"

#include <algorithm>
#include <limits>

namespace ramp {

double distance_to_segment(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, lerp(a, b, t));
}

int locate_in_polygon(const Polygon& poly, Point2 p, double eps) {
  const auto& r = poly.ring;
  const std::size_t n = r.size();
  if (n < 3) return -1;
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = r[j];
    const Point2 b = r[i];
    if (distance_to_segment(p, a, b) <= eps) return 0;
    // crossing-number test
    if ((b.y > p.y) != (a.y > p.y)) {
      const double x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_at) inside = !inside;
    }
  }
  return inside ? 1 : -1;
}

double distance_to_polygon(const Polygon& poly, Point2 p) {
  if (locate_in_polygon(poly, p) >= 0) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const auto& r = poly.ring;
  for (std::size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) {
    best = std::min(best, distance_to_segment(p, r[j], r[i]));
  }
  return best;
}

std::optional<double> segment_intersection_param(Point2 a, Point2 b, Point2 c, Point2 d) {
  const Point2 r = b - a;
  const Point2 s = d - c;
  const double denom = cross(r, s);
  if (denom == 0.0) return std::nullopt;
  const Point2 ca = c - a;
  const double t = cross(ca, s) / denom;
  const double u = cross(ca, r) / denom;
  constexpr double kSlack = 1e-12;
  if (t < -kSlack || t > 1.0 + kSlack || u < -kSlack || u > 1.0 + kSlack) return std::nullopt;
  return std::clamp(t, 0.0, 1.0);
}

Box bounding_box(const std::vector<Polygon>& polys) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  Box box{{inf, inf}, {-inf, -inf}};
  for (const auto& poly : polys) {
    for (const auto& p : poly.ring) {
      box.min.x = std::min(box.min.x, p.x);
      box.min.y = std::min(box.min.y, p.y);
      box.max.x = std::max(box.max.x, p.x);
      box.max.y = std::max(box.max.y, p.y);
    }
  }
  return box;
}

}  // namespace ramp
