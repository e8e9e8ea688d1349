#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "ramp/cost.hpp"
#include "ramp/indexed_heap.hpp"
#include "ramp/path_result.hpp"
#include "ramp/roadmap.hpp"

namespace ramp {

/// phi value of entries outside the risk zone.
inline constexpr VertexId kNoBorder = kNoVertex;
/// phi value of entries in the risk component containing a risk start vertex.
inline constexpr VertexId kStartBorder = kNoVertex - 1;

using SlotId = std::uint32_t;
inline constexpr SlotId kNoSlot = std::numeric_limits<SlotId>::max();

/// Search label: a dominating path reaching `u`.
struct RaspEntry {
  VertexId u = kNoVertex;
  double c = 0.0;       // cost-to-come
  double t = 0.0;       // duration
  double lambda = 0.0;  // exposure at u
  SlotId parent = kNoSlot;
  VertexId phi = kNoBorder;  // last risk-entry border point
};

/// Key under which optimal substructure holds: one live entry per key.
struct ChannelKey {
  VertexId vertex = kNoVertex;
  VertexId phi = kNoBorder;

  friend bool operator==(const ChannelKey&, const ChannelKey&) = default;
};

std::string format_channel(const ChannelKey& key);

/// a dominates b iff c[a] <= c[b] and lambda[a] <= lambda[b]. Throws
/// InvalidComparison for entries at different vertices.
bool dominates(const RaspEntry& a, const RaspEntry& b);

/// Zone combination of an edge traversal, with the split lengths for edges
/// that straddle the risk boundary.
struct EdgeTransition {
  bool from_risk = false;
  bool to_risk = false;
  double length = 0.0;         // Δt(u, v)
  double to_border = 0.0;      // Δt(u, φ) for straddling edges
  double from_border = 0.0;    // Δt(φ, v) for straddling edges
  VertexId border = kNoBorder; // φ(u, v) for a safe-to-risk edge
};

/// The four expand cases: (i) safe-safe, (ii) safe-risk, (iii) risk-risk,
/// (iv) risk-safe. The child's parent is left unset.
RaspEntry expand(const RaspEntry& tau, VertexId v, const EdgeTransition& step, const CostModel& model = {});

/// Expansion along a zone-pure refined edge leaving tau.u. Entering the risk
/// zone from a border vertex is case (ii) with Δt(u, φ) = 0; leaving it at a
/// border vertex is case (iv) with Δt(φ, v) = 0. A risk edge joining two
/// border vertices enters and leaves in one step.
RaspEntry expand(const RaspEntry& tau, const RefinedRoadmap& g, const RefinedEdge& e,
                 const CostModel& model = {});

using Heuristic = std::function<double(VertexId)>;

/// Straight-line distance to the goal. Admissible and consistent whenever
/// every edge is at least as long as the distance between its endpoints.
Heuristic euclidean_heuristic(const RefinedRoadmap& g, VertexId goal);

/// True if h(u) <= len(u, v) + h(v) on every edge and h(goal) == 0.
bool heuristic_is_consistent(const RefinedRoadmap& g, const Heuristic& h, VertexId goal);

struct SearchOptions {
  CostModel cost;
  bool domination_pruning = true;
  bool evict_dominated = true;  // only meaningful with domination_pruning
  bool capture_trace = false;
};

enum class TraceEvent { Push, Decrease, Pop, Dominated, Evict };

const char* to_string(TraceEvent e);

struct TraceRecord {
  TraceEvent event = TraceEvent::Push;
  ChannelKey key;
  double cost = 0.0;
  double lambda = 0.0;
};

/// Total order used by the queue: (priority, lambda, vertex, phi) with "no
/// border" ordered before every border id.
struct QueueKey {
  double priority = 0.0;
  double lambda = 0.0;
  VertexId vertex = kNoVertex;
  std::uint64_t phi_rank = 0;

  friend auto operator<=>(const QueueKey&, const QueueKey&) = default;
};

/// One execution of the incremental planner. Owns all mutable search state;
/// the roadmap is shared read-only.
class RaspSearch {
 public:
  RaspSearch(const RefinedRoadmap& g, SearchOptions options);

  /// Runs until the first entry at `goal` is finalized. A null heuristic
  /// orders the queue by cost alone.
  PathResult run(VertexId start, VertexId goal, const Heuristic& heuristic = nullptr);

  const std::vector<TraceRecord>& trace() const { return trace_; }
  /// Entries in the order they were finalized.
  std::vector<RaspEntry> finalized() const;
  /// Pop count per vertex.
  const std::vector<std::uint32_t>& pops_per_vertex() const { return pops_; }

 private:
  enum class SlotState : std::uint8_t { Queued, Closed, Evicted };
  struct Slot {
    RaspEntry entry;
    SlotState state = SlotState::Queued;
    SlotId next_at_vertex = kNoSlot;
  };

  SlotId find_slot(VertexId v, VertexId phi) const;
  SlotId create_slot(const RaspEntry& e);
  void relax(const RaspEntry& child);
  void enqueue(SlotId s, bool fresh);
  void record(TraceEvent ev, const RaspEntry& e);
  QueueKey key_for(const RaspEntry& e) const;
  void reset();

  const RefinedRoadmap& g_;
  SearchOptions options_;
  Heuristic heuristic_;
  std::vector<Slot> slots_;
  std::vector<SlotId> first_slot_;
  std::vector<std::uint32_t> live_;
  std::vector<std::uint32_t> pops_;
  std::vector<SlotId> closed_order_;
  IndexedMinHeap<QueueKey> queue_;
  std::vector<TraceRecord> trace_;
  SearchStats stats_;
};

/// Generalized Dijkstra over RASP entries.
PathResult incremental_search(const RefinedRoadmap& g, VertexId start, VertexId goal,
                              const SearchOptions& options = {});

/// Same search with the queue ordered by cost-to-come plus `heuristic`.
PathResult astar_search(const RefinedRoadmap& g, VertexId start, VertexId goal, const Heuristic& heuristic,
                        const SearchOptions& options = {});

}  // namespace ramp
