#pragma once

#include <cmath>
#include <optional>
#include <vector>

namespace ramp {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Point at parameter t on the segment a->b.
inline Point2 lerp(Point2 a, Point2 b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }

struct Box {
  Point2 min;
  Point2 max;

  bool contains(Point2 p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
};

/// Simple polygon given by its vertex ring (implicitly closed).
struct Polygon {
  std::vector<Point2> ring;
};

/// Signed position of p relative to the polygon: +1 strictly inside, 0 on the
/// boundary (within eps), -1 strictly outside.
int locate_in_polygon(const Polygon& poly, Point2 p, double eps = 1e-12);

/// Euclidean distance from p to the polygon region (0 if inside or on boundary).
double distance_to_polygon(const Polygon& poly, Point2 p);

double distance_to_segment(Point2 p, Point2 a, Point2 b);

/// Parameter along a->b where it crosses segment c->d, if they intersect
/// transversally. Collinear overlaps return nothing.
std::optional<double> segment_intersection_param(Point2 a, Point2 b, Point2 c, Point2 d);

Box bounding_box(const std::vector<Polygon>& polys);

}  // namespace ramp
