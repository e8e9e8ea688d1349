#include "ramp/rasp_search.hpp"

#include <algorithm>
#include <chrono>

#include "ramp/errors.hpp"

namespace ramp {

std::string format_channel(const ChannelKey& key) {
  std::string phi;
  if (key.phi == kNoBorder) {
    phi = "-";
  } else if (key.phi == kStartBorder) {
    phi = "start";
  } else {
    phi = std::to_string(key.phi);
  }
  return "(" + std::to_string(key.vertex) + ", " + phi + ")";
}

const char* to_string(TraceEvent e) {
  switch (e) {
    case TraceEvent::Push: return "push";
    case TraceEvent::Decrease: return "decrease";
    case TraceEvent::Pop: return "pop";
    case TraceEvent::Dominated: return "dominated";
    case TraceEvent::Evict: return "evict";
  }
  return "?";
}

bool dominates(const RaspEntry& a, const RaspEntry& b) {
  if (a.u != b.u) throw InvalidComparison("domination is only defined for entries at the same vertex");
  return a.c <= b.c && a.lambda <= b.lambda;
}

RaspEntry expand(const RaspEntry& tau, VertexId v, const EdgeTransition& step, const CostModel& model) {
  RaspEntry out;
  out.u = v;
  out.t = tau.t + step.length;
  if (!step.from_risk && !step.to_risk) {
    out.c = tau.c + step.length;
  } else if (!step.from_risk) {
    out.c = tau.c + step.to_border + model.excursion_cost(step.from_border);
    out.lambda = step.from_border;
    out.phi = step.border;
  } else if (step.to_risk) {
    out.c = tau.c + model.risk_increment(tau.lambda, step.length);
    out.lambda = tau.lambda + step.length;
    out.phi = tau.phi;
  } else {
    out.c = tau.c + model.risk_increment(tau.lambda, step.to_border) + step.from_border;
  }
  return out;
}

RaspEntry expand(const RaspEntry& tau, const RefinedRoadmap& g, const RefinedEdge& e, const CostModel& model) {
  const VertexId u = tau.u;
  const bool risk_u = g.is_risk(u);
  const bool risk_v = g.is_risk(e.to);
  if (!risk_u && (tau.lambda != 0.0 || tau.phi != kNoBorder)) {
    throw InternalError("entry outside the risk zone carries exposure");
  }
  if (e.zone == ZoneLabel::Safe) {
    if (risk_u || risk_v) throw InternalError("safe edge incident to a risk vertex");
    return expand(tau, e.to, EdgeTransition{false, false, e.length}, model);
  }
  if (!risk_u && !risk_v) {
    // risk edge between two border points: enter at u and leave at v
    RaspEntry out;
    out.u = e.to;
    out.c = tau.c + model.excursion_cost(e.length);
    out.t = tau.t + e.length;
    return out;
  }
  if (!risk_u) return expand(tau, e.to, EdgeTransition{false, true, e.length, 0.0, e.length, u}, model);
  if (risk_v) return expand(tau, e.to, EdgeTransition{true, true, e.length}, model);
  return expand(tau, e.to, EdgeTransition{true, false, e.length, e.length, 0.0}, model);
}

Heuristic euclidean_heuristic(const RefinedRoadmap& g, VertexId goal) {
  const Point2 target = g.point(goal);
  return [&g, target](VertexId v) { return distance(g.point(v), target); };
}

bool heuristic_is_consistent(const RefinedRoadmap& g, const Heuristic& h, VertexId goal) {
  if (h(goal) != 0.0) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const double hv = h(v);
    if (hv < 0.0) return false;
    for (const auto& e : g.neighbors(v)) {
      const double bound = e.length + h(e.to);
      if (hv > bound + 1e-12 * std::max(1.0, bound)) return false;
    }
  }
  return true;
}

namespace {

std::uint64_t phi_rank(VertexId phi) {
  if (phi == kNoBorder) return 0;
  if (phi == kStartBorder) return 1;
  return static_cast<std::uint64_t>(phi) + 2;
}

}  // namespace

RaspSearch::RaspSearch(const RefinedRoadmap& g, SearchOptions options) : g_(g), options_(options) {
  validate(options_.cost);
}

void RaspSearch::reset() {
  slots_.clear();
  first_slot_.assign(g_.vertex_count(), kNoSlot);
  live_.assign(g_.vertex_count(), 0);
  pops_.assign(g_.vertex_count(), 0);
  closed_order_.clear();
  queue_.clear();
  trace_.clear();
  stats_ = {};
}

SlotId RaspSearch::find_slot(VertexId v, VertexId phi) const {
  for (SlotId s = first_slot_[v]; s != kNoSlot; s = slots_[s].next_at_vertex) {
    if (slots_[s].entry.phi == phi) return s;
  }
  return kNoSlot;
}

SlotId RaspSearch::create_slot(const RaspEntry& e) {
  const auto s = static_cast<SlotId>(slots_.size());
  slots_.push_back({e, SlotState::Queued, first_slot_[e.u]});
  first_slot_[e.u] = s;
  stats_.live_channels_peak = std::max<std::size_t>(stats_.live_channels_peak, ++live_[e.u]);
  return s;
}

QueueKey RaspSearch::key_for(const RaspEntry& e) const {
  const double h = heuristic_ ? heuristic_(e.u) : 0.0;
  return {e.c + h, e.lambda, e.u, phi_rank(e.phi)};
}

void RaspSearch::record(TraceEvent ev, const RaspEntry& e) {
  if (options_.capture_trace) trace_.push_back({ev, {e.u, e.phi}, e.c, e.lambda});
}

void RaspSearch::enqueue(SlotId s, bool fresh) {
  const RaspEntry& e = slots_[s].entry;
  if (fresh) {
    queue_.push(s, key_for(e));
    ++stats_.pushes;
    record(TraceEvent::Push, e);
  } else {
    queue_.decrease(s, key_for(e));
    record(TraceEvent::Decrease, e);
  }
  stats_.queue_peak = std::max(stats_.queue_peak, queue_.size());
}

void RaspSearch::relax(const RaspEntry& child) {
  const VertexId v = child.u;
  const SlotId own = find_slot(v, child.phi);
  if (own != kNoSlot) {
    const Slot& slot = slots_[own];
    if (slot.state == SlotState::Closed) return;
    if (!(child.c < slot.entry.c)) return;
  }
  if (options_.domination_pruning) {
    for (SlotId s = first_slot_[v]; s != kNoSlot; s = slots_[s].next_at_vertex) {
      if (s == own || slots_[s].state == SlotState::Evicted) continue;
      if (dominates(slots_[s].entry, child)) {
        record(TraceEvent::Dominated, child);
        return;
      }
    }
    if (options_.evict_dominated) {
      for (SlotId s = first_slot_[v]; s != kNoSlot; s = slots_[s].next_at_vertex) {
        if (s == own || slots_[s].state != SlotState::Queued) continue;
        if (dominates(child, slots_[s].entry)) {
          queue_.erase(s);
          slots_[s].state = SlotState::Evicted;
          --live_[v];
          record(TraceEvent::Evict, slots_[s].entry);
        }
      }
    }
  }
  if (own == kNoSlot) {
    enqueue(create_slot(child), true);
    return;
  }
  Slot& slot = slots_[own];
  slot.entry = child;
  if (slot.state == SlotState::Queued) {
    enqueue(own, false);
  } else {
    slot.state = SlotState::Queued;
    stats_.live_channels_peak = std::max<std::size_t>(stats_.live_channels_peak, ++live_[v]);
    enqueue(own, true);
  }
}

PathResult RaspSearch::run(VertexId start, VertexId goal, const Heuristic& heuristic) {
  if (start >= g_.vertex_count() || goal >= g_.vertex_count()) {
    throw InvalidQuery("start or goal is not a vertex of the roadmap");
  }
  reset();
  heuristic_ = heuristic;
  PathResult result;
  result.algorithm = heuristic ? Algorithm::AStar : Algorithm::Incremental;
  const auto t0 = std::chrono::steady_clock::now();

  RaspEntry root;
  root.u = start;
  root.phi = g_.is_risk(start) ? kStartBorder : kNoBorder;
  enqueue(create_slot(root), true);

  SlotId reached = kNoSlot;
  while (!queue_.empty()) {
    const SlotId s = static_cast<SlotId>(queue_.pop().first);
    slots_[s].state = SlotState::Closed;
    closed_order_.push_back(s);
    const RaspEntry tau = slots_[s].entry;
    ++pops_[tau.u];
    record(TraceEvent::Pop, tau);
    if (tau.u == goal) {
      reached = s;
      break;
    }
    ++stats_.expansions;
    for (const RefinedEdge& e : g_.neighbors(tau.u)) {
      RaspEntry child = expand(tau, g_, e, options_.cost);
      child.parent = s;
      relax(child);
    }
  }

  if (reached != kNoSlot) {
    for (SlotId s = reached; s != kNoSlot; s = slots_[s].entry.parent) result.path.push_back(slots_[s].entry.u);
    std::reverse(result.path.begin(), result.path.end());
  }
  stats_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  result.stats = stats_;
  if (reached != kNoSlot) {
    result.status = SearchStatus::Found;
    result.breakdown = path_cost(g_, result.path, options_.cost);
    result.breakdown.total_cost = slots_[reached].entry.c;
  }
  return result;
}

std::vector<RaspEntry> RaspSearch::finalized() const {
  std::vector<RaspEntry> out;
  out.reserve(closed_order_.size());
  for (SlotId s : closed_order_) out.push_back(slots_[s].entry);
  return out;
}

PathResult incremental_search(const RefinedRoadmap& g, VertexId start, VertexId goal,
                              const SearchOptions& options) {
  return RaspSearch(g, options).run(start, goal);
}

PathResult astar_search(const RefinedRoadmap& g, VertexId start, VertexId goal, const Heuristic& heuristic,
                        const SearchOptions& options) {
  if (!heuristic) throw InvalidParameter("astar_search needs a heuristic");
  return RaspSearch(g, options).run(start, goal, heuristic);
}

}  // namespace ramp
