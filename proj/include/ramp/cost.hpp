#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "ramp/roadmap.hpp"
#include "ramp/world.hpp"

namespace ramp {

/// Exposure penalty f(x) = exp(alpha * x). alpha = 1 is the reference cost.
struct CostModel {
  double alpha = 1.0;

  /// Integral of f(lambda) over a risk stretch that starts at exposure
  /// `lambda0` and lasts `delta`.
  double risk_increment(double lambda0, double delta) const {
    return std::exp(alpha * lambda0) * std::expm1(alpha * delta) / alpha;
  }
  /// Cost of a whole excursion of the given duration.
  double excursion_cost(double duration) const { return std::expm1(alpha * duration) / alpha; }
};

/// Validates alpha > 0 and finite.
void validate(const CostModel& model);

struct SegmentCost {
  double delta_cost = 0.0;
  double lambda = 0.0;  // exposure at the segment end
};

/// Cost of moving `delta` through a zone-pure segment entered with exposure `lambda0`.
SegmentCost segment_cost(double lambda0, double delta, ZoneLabel zone, const CostModel& model = {});

/// Maximal risk stretch of a path.
struct Excursion {
  VertexId entry = kNoVertex;
  VertexId exit = kNoVertex;  // kNoVertex when the path ends inside the risk zone
  double duration = 0.0;
  double cost = 0.0;
};

struct CostBreakdown {
  double total_cost = 0.0;
  double total_time = 0.0;
  double safe_time = 0.0;
  std::vector<Excursion> excursions;

  double risk_time() const { return total_time - safe_time; }
};

/// Folds segment_cost along a vertex sequence of a refined roadmap. A path
/// starting at a Risk vertex begins with zero exposure.
CostBreakdown path_cost(const RefinedRoadmap& g, std::span<const VertexId> path,
                        const CostModel& model = {});

struct ExposureBreakpoint {
  double t = 0.0;
  double lambda = 0.0;
};

/// Breakpoints of the piecewise-linear exposure lambda(t). Exits from the risk
/// zone produce two breakpoints at the same time (peak, then 0).
std::vector<ExposureBreakpoint> exposure_profile(const RefinedRoadmap& g, std::span<const VertexId> path);

}  // namespace ramp
