#include "ramp/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "ramp/errors.hpp"
#include "ramp/indexed_heap.hpp"

namespace ramp {

namespace {

double edge_cost(const RefinedEdge& e, double) { return e.length; }

LexCost edge_cost(const RefinedEdge& e, const LexCost&) {
  return {e.zone == ZoneLabel::Risk ? e.length : 0.0, e.length};
}

double add(double a, double b) { return a + b; }
LexCost add(const LexCost& a, const LexCost& b) {
  return {a.risk_time + b.risk_time, a.total_length + b.total_length};
}

double infinite(double) { return std::numeric_limits<double>::infinity(); }
LexCost infinite(const LexCost&) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {inf, inf};
}

double scalar(double d) { return d; }
double scalar(const LexCost& c) { return c.total_length; }

/// Label-setting Dijkstra over an additive cost; ties broken by vertex id.
template <typename Cost>
PathResult generic_dijkstra(const RefinedRoadmap& g, VertexId start, VertexId goal, const CostModel& model,
                            Algorithm algorithm, std::vector<PopRecord>* pops) {
  validate(model);
  if (start >= g.vertex_count() || goal >= g.vertex_count()) {
    throw InvalidQuery("start or goal is not a vertex of the roadmap");
  }
  PathResult result;
  result.algorithm = algorithm;
  const auto t0 = std::chrono::steady_clock::now();
  const Cost inf = infinite(Cost{});
  std::vector<Cost> dist(g.vertex_count(), inf);
  std::vector<VertexId> parent(g.vertex_count(), kNoVertex);
  std::vector<bool> closed(g.vertex_count(), false);
  IndexedMinHeap<std::pair<Cost, VertexId>> heap(g.vertex_count());
  dist[start] = Cost{};
  heap.push(start, {Cost{}, start});
  ++result.stats.pushes;
  bool found = false;
  while (!heap.empty()) {
    const auto [w, key] = heap.pop();
    const auto u = static_cast<VertexId>(w);
    closed[u] = true;
    if (pops) pops->push_back({u, scalar(key.first)});
    if (u == goal) {
      found = true;
      break;
    }
    ++result.stats.expansions;
    for (const RefinedEdge& e : g.neighbors(u)) {
      if (closed[e.to]) continue;
      const Cost nd = add(key.first, edge_cost(e, Cost{}));
      if (!(nd < dist[e.to])) continue;
      dist[e.to] = nd;
      parent[e.to] = u;
      if (heap.contains(e.to)) {
        heap.decrease(e.to, {nd, e.to});
      } else {
        heap.push(e.to, {nd, e.to});
        ++result.stats.pushes;
      }
      result.stats.queue_peak = std::max(result.stats.queue_peak, heap.size());
    }
  }
  if (found) {
    for (VertexId v = goal; v != kNoVertex; v = parent[v]) result.path.push_back(v);
    std::reverse(result.path.begin(), result.path.end());
    result.status = SearchStatus::Found;
  }
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (found) result.breakdown = path_cost(g, result.path, model);
  return result;
}

}  // namespace

PathResult dijkstra_shortest(const RefinedRoadmap& g, VertexId start, VertexId goal, const CostModel& model,
                             std::vector<PopRecord>* pops) {
  return generic_dijkstra<double>(g, start, goal, model, Algorithm::Dijkstra, pops);
}

PathResult min_risk_path(const RefinedRoadmap& g, VertexId start, VertexId goal, const CostModel& model) {
  return generic_dijkstra<LexCost>(g, start, goal, model, Algorithm::MinRisk, nullptr);
}

}  // namespace ramp
