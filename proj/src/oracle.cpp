#include "ramp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "ramp/errors.hpp"

namespace ramp {

namespace {

constexpr std::size_t kMaxStoredWalks = 5'000'000;

void check_instance(const RefinedRoadmap& g, VertexId xs, VertexId u, std::size_t max_vertices) {
  if (g.vertex_count() > std::min<std::size_t>(max_vertices, 64)) {
    throw InstanceTooLarge("brute force limited to " + std::to_string(max_vertices) + " vertices, got " +
                           std::to_string(g.vertex_count()));
  }
  if (xs >= g.vertex_count() || u >= g.vertex_count()) throw InvalidQuery("vertex out of range");
}

std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

struct WalkState {
  VertexPath path;
  std::uint64_t nonrisk_seen = 0;
  std::uint64_t excursion_seen = 0;
  double cost = 0.0;
  double lambda = 0.0;
};

/// Depth-first walk enumeration. `visit(state)` is called at every arrival at
/// `target`, or at every vertex when target is kNoVertex; `prune(state)` cuts
/// a branch before it is extended.
template <typename Visit, typename Prune>
void walk(const RefinedRoadmap& g, VertexId target, const CostModel& model, WalkState& s, Visit& visit,
          Prune& prune) {
  const VertexId u = s.path.back();
  if (target == kNoVertex) {
    visit(s);
  } else if (u == target) {
    visit(s);
    if (!g.is_risk(u)) return;
  }
  if (prune(s)) return;
  for (const RefinedEdge& e : g.neighbors(u)) {
    const VertexId w = e.to;
    const bool w_risk = g.is_risk(w);
    if (w_risk ? (s.excursion_seen & bit(w)) != 0 : (s.nonrisk_seen & bit(w)) != 0) continue;

    const WalkState saved_scalars{{}, s.nonrisk_seen, s.excursion_seen, s.cost, s.lambda};
    if (e.zone == ZoneLabel::Safe) {
      s.cost += e.length;
    } else {
      s.cost += model.risk_increment(s.lambda, e.length);
      s.lambda += e.length;
    }
    if (w_risk) {
      s.excursion_seen |= bit(w);
    } else {
      s.nonrisk_seen |= bit(w);
      s.excursion_seen = 0;
      s.lambda = 0.0;
    }
    s.path.push_back(w);
    walk(g, target, model, s, visit, prune);
    s.path.pop_back();
    s.nonrisk_seen = saved_scalars.nonrisk_seen;
    s.excursion_seen = saved_scalars.excursion_seen;
    s.cost = saved_scalars.cost;
    s.lambda = saved_scalars.lambda;
  }
}

WalkState initial_state(const RefinedRoadmap& g, VertexId xs) {
  WalkState s;
  s.path.push_back(xs);
  if (g.is_risk(xs)) {
    s.excursion_seen = bit(xs);
  } else {
    s.nonrisk_seen = bit(xs);
  }
  return s;
}

void simple_paths(const RefinedRoadmap& g, VertexId u, VertexId target, std::uint64_t seen, VertexPath& path,
                  std::vector<VertexPath>& out) {
  if (u == target) {
    out.push_back(path);
    if (out.size() > kMaxStoredWalks) throw InstanceTooLarge("too many simple paths to enumerate");
    return;
  }
  for (const RefinedEdge& e : g.neighbors(u)) {
    if (seen & bit(e.to)) continue;
    path.push_back(e.to);
    simple_paths(g, e.to, target, seen | bit(e.to), path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<VertexPath> enumerate_simple_paths(const RefinedRoadmap& g, VertexId xs, VertexId u,
                                               std::size_t max_vertices) {
  check_instance(g, xs, u, max_vertices);
  std::vector<VertexPath> out;
  VertexPath path{xs};
  simple_paths(g, xs, u, bit(xs), path, out);
  return out;
}

std::vector<VertexPath> enumerate_candidate_walks(const RefinedRoadmap& g, VertexId xs, VertexId u,
                                                  std::size_t max_vertices) {
  check_instance(g, xs, u, max_vertices);
  std::vector<VertexPath> out;
  CostModel model;
  WalkState s = initial_state(g, xs);
  auto visit = [&](const WalkState& st) {
    out.push_back(st.path);
    if (out.size() > kMaxStoredWalks) throw InstanceTooLarge("too many walks to enumerate");
  };
  auto prune = [](const WalkState&) { return false; };
  walk(g, u, model, s, visit, prune);
  return out;
}

OracleOptimum brute_force_optimum(const RefinedRoadmap& g, VertexId xs, VertexId xg, const CostModel& model,
                                  std::size_t max_vertices) {
  check_instance(g, xs, xg, max_vertices);
  validate(model);
  OracleOptimum best{std::numeric_limits<double>::infinity(), {}};
  WalkState s = initial_state(g, xs);
  auto visit = [&](const WalkState& st) {
    if (st.cost < best.cost) best = {st.cost, st.path};
  };
  // extensions only add cost, so a branch at or above the incumbent is dead
  auto prune = [&](const WalkState& st) { return st.cost >= best.cost; };
  walk(g, xg, model, s, visit, prune);
  if (best.path.empty()) throw Unreachable("goal is not reachable from start");
  return best;
}

namespace {

void add_label(UsefulSet& set, const WalkState& st) {
  auto& labels = set.labels;
  for (const auto& l : labels) {
    if (l.cost <= st.cost && l.lambda <= st.lambda) return;
  }
  std::erase_if(labels, [&](const UsefulLabel& l) { return st.cost <= l.cost && st.lambda <= l.lambda; });
  labels.push_back({st.cost, st.lambda, st.path});
}

void sort_labels(UsefulSet& set) {
  std::sort(set.labels.begin(), set.labels.end(),
            [](const UsefulLabel& a, const UsefulLabel& b) { return a.cost < b.cost; });
}

}  // namespace

std::vector<UsefulSet> useful_sets(const RefinedRoadmap& g, VertexId xs, const CostModel& model,
                                   std::size_t max_vertices) {
  check_instance(g, xs, xs, max_vertices);
  validate(model);
  std::vector<UsefulSet> out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[v].vertex = v;
  WalkState s = initial_state(g, xs);
  auto visit = [&](const WalkState& st) { add_label(out[st.path.back()], st); };
  auto prune = [](const WalkState&) { return false; };
  walk(g, kNoVertex, model, s, visit, prune);
  for (auto& set : out) sort_labels(set);
  return out;
}

UsefulSet useful_set(const RefinedRoadmap& g, VertexId xs, VertexId u, const CostModel& model,
                     std::size_t max_vertices) {
  check_instance(g, xs, u, max_vertices);
  validate(model);
  UsefulSet out;
  out.vertex = u;
  WalkState s = initial_state(g, xs);
  auto visit = [&](const WalkState& st) { add_label(out, st); };
  auto prune = [](const WalkState&) { return false; };
  walk(g, u, model, s, visit, prune);
  sort_labels(out);
  return out;
}

}  // namespace ramp
