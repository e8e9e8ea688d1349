#include "ramp/precompute_search.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "ramp/errors.hpp"
#include "ramp/indexed_heap.hpp"

namespace ramp {

BorderTable::BorderTable(std::vector<VertexId> borders)
    : borders_(std::move(borders)), times_(borders_.size() * borders_.size(), kUnreachable) {
  for (std::size_t i = 0; i < borders_.size(); ++i) at(i, i) = 0.0;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Single-source shortest paths over risk edges; non-risk vertices other than
/// the source are reached but never expanded. Buffers are reused across runs.
class RiskDijkstra {
 public:
  explicit RiskDijkstra(const RefinedRoadmap& g)
      : g_(g),
        dist_(g.vertex_count(), BorderTable::kUnreachable),
        parent_(g.vertex_count(), kNoVertex),
        heap_(g.vertex_count()) {}

  void run(VertexId source) {
    for (VertexId v : touched_) {
      dist_[v] = BorderTable::kUnreachable;
      parent_[v] = kNoVertex;
    }
    touched_.clear();
    heap_.clear();
    dist_[source] = 0.0;
    touched_.push_back(source);
    heap_.push(source, {0.0, source});
    while (!heap_.empty()) {
      const auto [w, key] = heap_.pop();
      const auto u = static_cast<VertexId>(w);
      if (u != source && !g_.is_risk(u)) continue;
      for (const RefinedEdge& e : g_.neighbors(u)) {
        if (e.zone != ZoneLabel::Risk) continue;
        const double nd = key.first + e.length;
        if (!(nd < dist_[e.to])) continue;
        if (dist_[e.to] == BorderTable::kUnreachable) touched_.push_back(e.to);
        dist_[e.to] = nd;
        parent_[e.to] = u;
        if (heap_.contains(e.to)) {
          heap_.decrease(e.to, {nd, e.to});
        } else {
          heap_.push(e.to, {nd, e.to});
        }
      }
    }
  }

  double dist(VertexId v) const { return dist_[v]; }
  VertexId parent(VertexId v) const { return parent_[v]; }

 private:
  const RefinedRoadmap& g_;
  std::vector<double> dist_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> touched_;
  IndexedMinHeap<std::pair<double, VertexId>> heap_;
};

}  // namespace

BorderTable risk_restricted_apsp(const RefinedRoadmap& g) {
  BorderTable table(g.border_ids());
  const auto& borders = table.borders();
  RiskDijkstra dijkstra(g);
  for (std::size_t i = 0; i < borders.size(); ++i) {
    dijkstra.run(borders[i]);
    for (std::size_t j = 0; j < borders.size(); ++j) {
      if (i != j) table.at(i, j) = dijkstra.dist(borders[j]);
    }
  }
  for (std::size_t i = 0; i < borders.size(); ++i) {
    for (std::size_t j = i + 1; j < borders.size(); ++j) {
      const double t = std::min(table.at(i, j), table.at(j, i));
      table.at(i, j) = table.at(j, i) = t;
    }
  }
  return table;
}

std::vector<VertexId> risk_restricted_path(const RefinedRoadmap& g, VertexId from, VertexId to) {
  RiskDijkstra dijkstra(g);
  dijkstra.run(from);
  if (dijkstra.dist(to) == BorderTable::kUnreachable) return {};
  std::vector<VertexId> chain;
  for (VertexId v = to; v != kNoVertex; v = dijkstra.parent(v)) chain.push_back(v);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

AugmentedGraph build_augmented_graph(const RefinedRoadmap& g, const BorderTable& table, const CostModel& model) {
  AugmentedGraph out;
  out.adjacency.resize(g.vertex_count());
  out.in_graph.assign(g.vertex_count(), false);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (g.is_risk(u)) continue;
    out.in_graph[u] = true;
    ++out.vertex_count;
    for (const RefinedEdge& e : g.neighbors(u)) {
      if (e.zone != ZoneLabel::Safe) continue;
      out.adjacency[u].push_back({e.to, e.length, false});
      if (u < e.to) ++out.safe_edge_count;
    }
  }
  const auto& borders = table.borders();
  for (std::size_t i = 0; i < borders.size(); ++i) {
    for (std::size_t j = i + 1; j < borders.size(); ++j) {
      const double t = table.at(i, j);
      if (t == BorderTable::kUnreachable) continue;
      const double w = model.excursion_cost(t);
      out.adjacency[borders[i]].push_back({borders[j], w, true});
      out.adjacency[borders[j]].push_back({borders[i], w, true});
      ++out.border_edge_count;
    }
  }
  return out;
}

std::size_t estimate_precompute_bytes(const RefinedRoadmap& g) {
  const std::size_t nb = g.border_count();
  return nb * nb * sizeof(double) + (nb > 0 ? nb * (nb - 1) : 0) * sizeof(AugmentedEdge);
}

PathResult precompute_search(const RefinedRoadmap& g, VertexId start, VertexId goal,
                             const PrecomputeOptions& options) {
  validate(options.cost);
  if (start >= g.vertex_count() || goal >= g.vertex_count()) {
    throw InvalidQuery("start or goal is not a vertex of the roadmap");
  }
  if (g.is_risk(start) || g.is_risk(goal)) {
    throw UnsupportedQuery("precompute_search needs start and goal outside the risk zone");
  }
  const std::size_t estimate = estimate_precompute_bytes(g);
  if (estimate > options.memory_budget_bytes) {
    throw ResourceAbort("border table needs " + std::to_string(estimate) + " bytes, budget is " +
                            std::to_string(options.memory_budget_bytes),
                        estimate, options.memory_budget_bytes);
  }

  PathResult result;
  result.algorithm = Algorithm::Precompute;
  const auto t0 = Clock::now();
  const BorderTable table = risk_restricted_apsp(g);
  result.stats.apsp_seconds = seconds_since(t0);
  result.stats.table_bytes = table.bytes();

  const AugmentedGraph aug = build_augmented_graph(g, table, options.cost);
  result.stats.border_edges = aug.border_edge_count;

  std::vector<double> dist(g.vertex_count(), BorderTable::kUnreachable);
  std::vector<VertexId> parent(g.vertex_count(), kNoVertex);
  std::vector<bool> via_risk(g.vertex_count(), false);
  std::vector<bool> closed(g.vertex_count(), false);
  IndexedMinHeap<std::pair<double, VertexId>> heap(g.vertex_count());
  dist[start] = 0.0;
  heap.push(start, {0.0, start});
  bool found = false;
  while (!heap.empty()) {
    const auto [w, key] = heap.pop();
    const auto u = static_cast<VertexId>(w);
    closed[u] = true;
    ++result.stats.expansions;
    if (u == goal) {
      found = true;
      break;
    }
    for (const AugmentedEdge& e : aug.adjacency[u]) {
      if (closed[e.to]) continue;
      const double nd = key.first + e.weight;
      if (!(nd < dist[e.to])) continue;
      dist[e.to] = nd;
      parent[e.to] = u;
      via_risk[e.to] = e.risk_traversal;
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
    std::vector<VertexId> reversed;
    for (VertexId v = goal; v != kNoVertex; v = parent[v]) reversed.push_back(v);
    std::reverse(reversed.begin(), reversed.end());
    result.path.push_back(reversed.front());
    for (std::size_t i = 1; i < reversed.size(); ++i) {
      const VertexId v = reversed[i];
      if (via_risk[v]) {
        const auto chain = risk_restricted_path(g, reversed[i - 1], v);
        if (chain.empty()) throw InternalError("risk traversal edge without an underlying path");
        result.path.insert(result.path.end(), chain.begin() + 1, chain.end());
      } else {
        result.path.push_back(v);
      }
    }
    result.status = SearchStatus::Found;
  }
  result.stats.wall_seconds = seconds_since(t0);
  if (found) {
    result.breakdown = path_cost(g, result.path, options.cost);
    result.breakdown.total_cost = dist[goal];
  }
  return result;
}

}  // namespace ramp
