#include "ramp/cost.hpp"

#include <string>

#include "ramp/errors.hpp"

namespace ramp {

void validate(const CostModel& model) {
  if (!(model.alpha > 0.0) || !std::isfinite(model.alpha)) {
    throw InvalidParameter("risk sensitivity alpha must be positive");
  }
}

SegmentCost segment_cost(double lambda0, double delta, ZoneLabel zone, const CostModel& model) {
  validate(model);
  if (!(lambda0 >= 0.0) || !(delta >= 0.0)) throw InvalidParameter("segment_cost needs non-negative inputs");
  switch (zone) {
    case ZoneLabel::Safe:
      if (lambda0 != 0.0) throw InvalidParameter("safe segments start with zero exposure");
      return {delta, 0.0};
    case ZoneLabel::Risk:
      return {model.risk_increment(lambda0, delta), lambda0 + delta};
    case ZoneLabel::Obstacle:
      break;
  }
  throw InvalidParameter("segment_cost on an obstacle segment");
}

namespace {

const RefinedEdge& edge_between(const RefinedRoadmap& g, VertexId u, VertexId v, std::size_t index) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw NotAnEdge("path vertex out of range");
  const RefinedEdge* e = g.find_edge(u, v);
  if (!e) {
    throw NotAnEdge("path steps " + std::to_string(index) + " -> " + std::to_string(index + 1) +
                    " (" + std::to_string(u) + ", " + std::to_string(v) + ") are not connected");
  }
  return *e;
}

}  // namespace

CostBreakdown path_cost(const RefinedRoadmap& g, std::span<const VertexId> path, const CostModel& model) {
  if (path.empty()) throw InvalidParameter("empty path");
  if (path.front() >= g.vertex_count()) throw NotAnEdge("path vertex out of range");
  CostBreakdown out;
  double lambda = 0.0;
  bool in_risk = g.is_risk(path.front());
  Excursion current;
  if (in_risk) current.entry = path.front();

  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const VertexId u = path[i];
    const VertexId v = path[i + 1];
    const RefinedEdge& e = edge_between(g, u, v, i);
    const SegmentCost step = segment_cost(lambda, e.length, e.zone, model);
    out.total_cost += step.delta_cost;
    out.total_time += e.length;
    if (e.zone == ZoneLabel::Safe) {
      out.safe_time += e.length;
      continue;
    }
    if (!in_risk) {
      in_risk = true;
      current = Excursion{u, kNoVertex, 0.0, 0.0};
    }
    current.duration += e.length;
    lambda = step.lambda;
    if (!g.is_risk(v)) {
      current.exit = v;
      current.cost = model.excursion_cost(current.duration);
      out.excursions.push_back(current);
      in_risk = false;
      lambda = 0.0;
    }
  }
  if (in_risk && current.duration > 0.0) {
    current.cost = model.excursion_cost(current.duration);
    out.excursions.push_back(current);
  }
  return out;
}

std::vector<ExposureBreakpoint> exposure_profile(const RefinedRoadmap& g, std::span<const VertexId> path) {
  if (path.empty()) throw InvalidParameter("empty path");
  if (path.front() >= g.vertex_count()) throw NotAnEdge("path vertex out of range");
  std::vector<ExposureBreakpoint> out{{0.0, 0.0}};
  double t = 0.0;
  double lambda = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const RefinedEdge& e = edge_between(g, path[i], path[i + 1], i);
    t += e.length;
    if (e.zone == ZoneLabel::Risk) {
      lambda += e.length;
      out.push_back({t, lambda});
      if (!g.is_risk(path[i + 1])) {
        lambda = 0.0;
        out.push_back({t, 0.0});
      }
    } else {
      out.push_back({t, 0.0});
    }
  }
  return out;
}

}  // namespace ramp
