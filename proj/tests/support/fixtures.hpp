#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ramp/cost.hpp"
#include "ramp/rasp_search.hpp"
#include "ramp/roadmap.hpp"

namespace fixtures {

using ramp::VertexId;

// x_s, x1, x2 Safe; y, z Risk
inline constexpr VertexId kXs = 0, kX1 = 1, kX2 = 2, kY = 3, kZ = 4;

inline ramp::Roadmap fig1_roadmap() {
  ramp::Roadmap g;
  g.add_vertex({0.0, 0.0}, ramp::ZoneLabel::Safe);
  g.add_vertex({0.5, 0.0}, ramp::ZoneLabel::Safe);
  g.add_vertex({3.0, 0.0}, ramp::ZoneLabel::Safe);
  g.add_vertex({2.0, 0.0}, ramp::ZoneLabel::Risk);
  g.add_vertex({2.0, 0.5}, ramp::ZoneLabel::Risk);
  g.add_edge(kXs, kX1, 0.5);
  g.add_edge(kXs, kX2, 3.0);
  g.add_edge(kX1, kY, 1.5);
  g.add_edge(kX2, kY, 1.0);
  g.add_edge(kY, kZ, 0.5);
  return g;
}

inline ramp::RefinedRoadmap fig1() { return ramp::refine(fig1_roadmap()); }

struct RandomGraph {
  ramp::RefinedRoadmap g;
  VertexId start = 0;
  VertexId goal = 0;
};

/// Random explicit graph with n vertices: random zones, a random spanning
/// tree plus extra edges, lengths at least the Euclidean distance so the
/// straight-line heuristic stays consistent. Some Safe-Safe edges are forced
/// to Risk. `risk_start` allows a Risk start vertex.
inline RandomGraph random_graph(std::mt19937_64& rng, int n, bool risk_start) {
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  std::uniform_real_distribution<double> stretch(1.0, 2.5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, n - 1);
  const double p_risk = 0.2 + 0.6 * unit(rng);

  ramp::Roadmap g;
  for (int i = 0; i < n; ++i) {
    const bool risk = unit(rng) < p_risk;
    g.add_vertex({coord(rng), coord(rng)}, risk ? ramp::ZoneLabel::Risk : ramp::ZoneLabel::Safe);
  }
  auto add = [&](VertexId u, VertexId v) {
    if (u == v || g.find_edge(u, v)) return;
    const double d = std::max(ramp::distance(g.point(u), g.point(v)), 0.05);
    std::optional<ramp::ZoneLabel> zone;
    if (g.zone(u) == ramp::ZoneLabel::Safe && g.zone(v) == ramp::ZoneLabel::Safe && unit(rng) < 0.15) {
      zone = ramp::ZoneLabel::Risk;
    }
    g.add_edge(u, v, d * stretch(rng), zone);
  };
  // spanning tree most of the time, occasionally left disconnected
  const bool connected = unit(rng) < 0.9;
  for (int i = 1; i < n; ++i) {
    if (connected || unit(rng) < 0.7) add(static_cast<VertexId>(i), static_cast<VertexId>(pick(rng) % i));
  }
  const int extra = static_cast<int>(unit(rng) * 1.5 * n);
  for (int k = 0; k < extra; ++k) add(static_cast<VertexId>(pick(rng)), static_cast<VertexId>(pick(rng)));

  RandomGraph out;
  out.g = ramp::refine(g);
  std::vector<VertexId> safe;
  for (VertexId v = 0; v < out.g.vertex_count(); ++v) {
    if (!out.g.is_risk(v)) safe.push_back(v);
  }
  if (risk_start || safe.empty()) {
    out.start = static_cast<VertexId>(pick(rng));
  } else {
    out.start = safe[static_cast<std::size_t>(pick(rng)) % safe.size()];
  }
  out.goal = static_cast<VertexId>(pick(rng));
  return out;
}

/// Cost of a path by composite Simpson quadrature of exp(alpha * lambda(t)),
/// simulating the exposure clock edge by edge.
inline double quadrature_cost(const ramp::RefinedRoadmap& g, const std::vector<VertexId>& path, double alpha,
                              int panels_per_edge = 2000) {
  double total = 0.0;
  double lambda = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const ramp::RefinedEdge* e = g.find_edge(path[i], path[i + 1]);
    const bool risk = e->zone == ramp::ZoneLabel::Risk;
    const double len = e->length;
    const double lam0 = lambda;
    auto f = [&](double s) { return std::exp(alpha * (risk ? lam0 + s : 0.0)); };
    const int m = panels_per_edge;
    const double h = len / (2 * m);
    double acc = f(0.0) + f(len);
    for (int k = 1; k < 2 * m; ++k) acc += f(k * h) * (k % 2 ? 4.0 : 2.0);
    total += acc * h / 3.0;
    lambda = risk ? lam0 + len : 0.0;
    if (!g.is_risk(path[i + 1])) lambda = 0.0;
  }
  return total;
}

inline std::uint64_t phi_rank(VertexId phi) {
  if (phi == ramp::kNoBorder) return 0;
  if (phi == ramp::kStartBorder) return 1;
  return static_cast<std::uint64_t>(phi) + 2;
}

/// Rebuilds the queue contents from a trace. One line per pop, showing the
/// queue just before that pop (letters a, b, ...) plus entries evicted since
/// the previous line, and a final "goal" line for the last pop.
inline std::string queue_snapshots(const std::vector<ramp::TraceRecord>& trace) {
  struct Item {
    double cost, lambda;
    VertexId vertex, phi;
  };
  auto key_of = [](const Item& it) {
    return std::tuple{it.cost, it.lambda, it.vertex, phi_rank(it.phi)};
  };
  auto show = [](const Item& it) {
    return fmt::format("{} {:.6f} {:.6f}", ramp::format_channel({it.vertex, it.phi}), it.cost, it.lambda);
  };
  std::map<std::pair<VertexId, VertexId>, Item> queue;
  std::vector<Item> evicted;
  std::string out;
  std::string last_pop;
  char step = 'a';
  for (const auto& r : trace) {
    const auto k = std::pair{r.key.vertex, r.key.phi};
    const Item item{r.cost, r.lambda, r.key.vertex, r.key.phi};
    switch (r.event) {
      case ramp::TraceEvent::Push:
      case ramp::TraceEvent::Decrease:
        queue[k] = item;
        break;
      case ramp::TraceEvent::Evict:
        queue.erase(k);
        evicted.push_back(item);
        break;
      case ramp::TraceEvent::Dominated:
        break;
      case ramp::TraceEvent::Pop: {
        std::vector<Item> items;
        for (const auto& [_, it] : queue) items.push_back(it);
        std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) { return key_of(a) < key_of(b); });
        std::string line = fmt::format("{}:", step++);
        for (std::size_t i = 0; i < items.size(); ++i) line += (i ? " | " : " ") + show(items[i]);
        for (std::size_t i = 0; i < evicted.size(); ++i) line += (i ? ", " : " ; evicted ") + show(evicted[i]);
        out += line + "\n";
        evicted.clear();
        queue.erase(k);
        last_pop = show(item);
        break;
      }
    }
  }
  out += "goal: " + last_pop + "\n";
  return out;
}

/// Golden file contents without '#' comment lines.
inline std::string strip_comments(const std::string& text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    const std::string line = text.substr(pos, nl - pos);
    if (!line.empty() && line[0] != '#') out += line + "\n";
    pos = nl + 1;
  }
  return out;
}

}  // namespace fixtures
