#include "ramp/coastal.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "ramp/errors.hpp"

namespace ramp {

namespace {

Polygon blob(Point2 c, double radius, int corners, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> jitter(0.7, 1.0);
  Polygon p;
  for (int k = 0; k < corners; ++k) {
    const double a = 2.0 * std::numbers::pi * k / corners;
    const double r = radius * jitter(rng);
    p.ring.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
  }
  return p;
}

}  // namespace

CoastalLayout coastal_layout(const CoastalParams& params) {
  if (params.cells < 21) throw InvalidParameter("coastal world needs at least 21 cells per side");
  if (!(params.cell_size > 0.0)) throw InvalidParameter("cell_size must be positive");
  if (!(params.offset > 0.0)) throw InvalidParameter("offset must be positive");
  if (params.islands < 0) throw InvalidParameter("island count must be >= 0");

  const double w = params.cells * params.cell_size;
  const auto at = [w](double fx, double fy) { return Point2{fx * w, fy * w}; };
  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  CoastalLayout out;
  out.bounds = {{0.0, 0.0}, {w, w}};

  // mainland along the bottom edge, cut by a bay between 25% and 75% width
  const double shore = 0.62 + 0.06 * unit(rng);
  const double bay_floor = 0.92 + 0.03 * unit(rng);
  Polygon mainland;
  mainland.ring = {at(0.0, 1.0),  at(0.0, shore),       at(0.25, shore),
                   at(0.35, bay_floor), at(0.65, bay_floor), at(0.75, shore),
                   at(1.0, shore), at(1.0, 1.0)};
  out.land.push_back(mainland);

  for (int i = 0; i < params.islands; ++i) {
    const Point2 c = at(0.33 + 0.34 * unit(rng), 0.45 + 0.35 * unit(rng));
    const double r = (0.02 + 0.03 * unit(rng)) * w;
    const int corners = 7 + static_cast<int>(unit(rng) * 6.0);
    out.land.push_back(blob(c, r, corners, rng));
  }

  const double band = std::min(params.offset * 0.5, 0.02 * w);
  out.start = {0.1 * w, shore * w - band};
  out.goal = {0.9 * w, shore * w - band};
  return out;
}

World coastal_world(const CoastalParams& params) {
  const CoastalLayout layout = coastal_layout(params);
  return risk_offset_world(layout.land, params.offset, layout.bounds, params.cell_size);
}

}  // namespace ramp
