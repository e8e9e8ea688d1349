// Acceptance checks. One PASS/FAIL line per criterion; nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ramp/baselines.hpp"
#include "ramp/bench.hpp"
#include "ramp/errors.hpp"
#include "ramp/oracle.hpp"
#include "ramp/precompute_search.hpp"
#include "ramp/rasp_search.hpp"
#include "ramp/scenario.hpp"
#include "support/fixtures.hpp"

using namespace ramp;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// |a - b| <= tol, scaled by |b| once costs exceed 1 (large excursions leave
/// fewer absolute digits than 1e-9).
bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

PathResult incremental(const RefinedRoadmap& g, VertexId s, VertexId t, RaspSearch* keep = nullptr,
                       double alpha = 1.0) {
  SearchOptions o;
  o.cost.alpha = alpha;
  if (keep) return keep->run(s, t);
  RaspSearch search(g, o);
  return search.run(s, t);
}

// ---------------------------------------------------------------------------

Outcome fig1_exactness() {
  Outcome out;
  const RefinedRoadmap g = fixtures::fig1();
  using namespace fixtures;
  const double e = std::exp(1.0);
  const double want_y = 0.5 + std::exp(1.5) - 1.0;
  const double want_z = 3.0 + std::exp(1.5) - 1.0;

  const auto t0 = Clock::now();
  RaspSearch sy(g, SearchOptions{});
  const PathResult y = sy.run(kXs, kY);
  RaspSearch sz(g, SearchOptions{});
  const PathResult z = sz.run(kXs, kZ);
  const double elapsed = seconds_since(t0);

  if (!y.found() || std::abs(y.cost() - want_y) > 1e-9) out.fail(fmt::format("cost to y {:.12f}", y.cost()));
  if (!z.found() || std::abs(z.cost() - want_z) > 1e-9) out.fail(fmt::format("cost to z {:.12f}", z.cost()));
  if (y.path != std::vector<VertexId>{kXs, kX1, kY}) out.fail("y not reached via x1");
  if (z.path != std::vector<VertexId>{kXs, kX2, kY, kZ}) out.fail("z not reached via x2");

  const std::vector<VertexId> alt_y{kXs, kX2, kY}, alt_z{kXs, kX1, kY, kZ};
  const double cy = path_cost(g, alt_y).total_cost, cz = path_cost(g, alt_z).total_cost;
  if (std::abs(cy - (3.0 + e - 1.0)) > 1e-9) out.fail(fmt::format("alternative to y {:.12f}", cy));
  if (std::abs(cz - (0.5 + std::exp(2.0) - 1.0)) > 1e-9) out.fail(fmt::format("alternative to z {:.12f}", cz));
  // the predecessor of y on its own optimum differs from the one on z's optimum
  if (y.path[1] == z.path[1]) out.fail("no substructure flip");
  if (elapsed >= 1e-3) out.fail(fmt::format("took {:.3f} ms", elapsed * 1e3));
  if (out.pass) {
    out.detail = fmt::format("y {:.9f} via x1, z {:.9f} via x2, {:.1f} us", y.cost(), z.cost(), elapsed * 1e6);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct OracleRun {
  fixtures::RandomGraph rg;
  std::vector<std::uint32_t> pops;
  std::size_t live_peak = 0;
  std::vector<RaspEntry> finalized;
};

Outcome oracle_equivalence(std::vector<OracleRun>& runs) {
  Outcome out;
  std::mt19937_64 rng(20240611);
  const int instances = 240;
  std::size_t precompute_checked = 0, reachable = 0;
  const auto t0 = Clock::now();
  for (int i = 0; i < instances; ++i) {
    OracleRun run{fixtures::random_graph(rng, 3 + i % 10, i % 4 == 0)};
    const auto& g = run.rg.g;
    const VertexId s = run.rg.start, t = run.rg.goal;

    double best = INFINITY;
    try {
      best = brute_force_optimum(g, s, t).cost;
    } catch (const Unreachable&) {
    }
    RaspSearch search(g, SearchOptions{});
    const PathResult inc = search.run(s, t);
    run.pops = search.pops_per_vertex();
    run.live_peak = inc.stats.live_channels_peak;
    run.finalized = search.finalized();

    const Heuristic h = euclidean_heuristic(g, t);
    if (!heuristic_is_consistent(g, h, t)) {
      out.fail(fmt::format("instance {}: heuristic not consistent", i));
      continue;
    }
    RaspSearch astar_search(g, SearchOptions{});
    const PathResult astar = astar_search.run(s, t, h);

    if (std::isinf(best)) {
      if (inc.found() || astar.found()) out.fail(fmt::format("instance {}: planner found a path, oracle none", i));
    } else {
      ++reachable;
      if (!inc.found() || !close(inc.cost(), best, 1e-9)) {
        out.fail(fmt::format("instance {}: incremental {:.12f} vs oracle {:.12f}", i, inc.cost(), best));
      }
      if (!astar.found() || !close(astar.cost(), best, 1e-9)) {
        out.fail(fmt::format("instance {}: astar {:.12f} vs oracle {:.12f}", i, astar.cost(), best));
      }
    }
    if (!g.is_risk(s) && !g.is_risk(t)) {
      ++precompute_checked;
      const PathResult pre = precompute_search(g, s, t);
      if (pre.found() != !std::isinf(best)) {
        out.fail(fmt::format("instance {}: precompute reachability differs", i));
      } else if (pre.found() && !close(pre.cost(), best, 1e-9)) {
        out.fail(fmt::format("instance {}: precompute {:.12f} vs oracle {:.12f}", i, pre.cost(), best));
      }
    }
    runs.push_back(std::move(run));
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 30.0) out.fail(fmt::format("took {:.1f} s", elapsed));
  if (out.pass) {
    out.detail = fmt::format("{} instances ({} reachable, {} with safe endpoints), {:.2f} s", instances, reachable,
                             precompute_checked, elapsed);
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome dijkstra_reduction() {
  Outcome out;
  std::mt19937_64 rng(77001);
  std::uniform_int_distribution<int> size(5, 50);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t total_pops = 0;
  for (int i = 0; i < 50; ++i) {
    CellGrid cg;
    cg.rows = size(rng);
    cg.cols = size(rng);
    const double p_obstacle = 0.3 * unit(rng);
    for (int k = 0; k < cg.rows * cg.cols; ++k) {
      cg.cells.push_back(unit(rng) < p_obstacle ? ZoneLabel::Obstacle : ZoneLabel::Safe);
    }
    const World world(std::move(cg));
    const Roadmap r = build_grid_roadmap(world, (i % 3 == 0) ? Connectivity::Four : Connectivity::Eight);
    if (r.vertex_count() < 2) continue;
    const RefinedRoadmap g = refine(r, world);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.vertex_count() - 1));
    const VertexId s = pick(rng), t = pick(rng);

    SearchOptions o;
    o.capture_trace = true;
    RaspSearch search(g, o);
    const PathResult inc = search.run(s, t);
    std::vector<PopRecord> pops;
    const PathResult dj = dijkstra_shortest(g, s, t, {}, &pops);

    std::vector<PopRecord> rasp_pops;
    for (const auto& rec : search.trace()) {
      if (rec.event == TraceEvent::Pop) rasp_pops.push_back({rec.key.vertex, rec.cost});
    }
    total_pops += pops.size();
    if (inc.found() != dj.found()) {
      out.fail(fmt::format("grid {}: reachability differs", i));
      continue;
    }
    if (inc.path != dj.path) out.fail(fmt::format("grid {}: paths differ", i));
    if (inc.found() && inc.cost() != dj.cost()) {
      out.fail(fmt::format("grid {}: cost {:.17g} vs {:.17g}", i, inc.cost(), dj.cost()));
    }
    bool same = rasp_pops.size() == pops.size();
    for (std::size_t k = 0; same && k < pops.size(); ++k) {
      same = rasp_pops[k].vertex == pops[k].vertex && rasp_pops[k].cost == pops[k].cost;
    }
    if (!same) out.fail(fmt::format("grid {}: pop traces differ ({} vs {} pops)", i, rasp_pops.size(), pops.size()));
  }
  if (out.pass) out.detail = fmt::format("50 grids, {} pops compared", total_pops);
  return out;
}

// ---------------------------------------------------------------------------

Outcome domination_invariants(const std::vector<OracleRun>& runs) {
  Outcome out;
  std::size_t labels_checked = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& run = runs[i];
    const auto& g = run.rg.g;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!g.is_risk(v) && run.pops[v] > 1) out.fail(fmt::format("run {}: vertex {} finalized {} times", i, v, run.pops[v]));
    }
    if (run.live_peak > g.border_count() + 1) {
      out.fail(fmt::format("run {}: {} live channels with n_B = {}", i, run.live_peak, g.border_count()));
    }
    const std::vector<UsefulSet> frontier = useful_sets(g, run.rg.start);
    for (const RaspEntry& e : run.finalized) {
      const auto& labels = frontier[e.u].labels;
      const bool on_frontier = std::any_of(labels.begin(), labels.end(), [&](const UsefulLabel& l) {
        return close(l.cost, e.c, 1e-9) && std::abs(l.lambda - e.lambda) <= 1e-9 * std::max(1.0, e.lambda);
      });
      ++labels_checked;
      if (!on_frontier) {
        out.fail(fmt::format("run {}: label ({:.9f}, {:.9f}) at {} not on the frontier", i, e.c, e.lambda, e.u));
      }
    }
  }
  if (out.pass) out.detail = fmt::format("{} runs, {} finalized labels on the frontier", runs.size(), labels_checked);
  return out;
}

// ---------------------------------------------------------------------------

Outcome cost_function() {
  Outcome out;
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  int paths = 0;
  while (paths < 1000) {
    // random grid world with risk cells, refined; a random walk over it
    CellGrid cg;
    cg.rows = 8;
    cg.cols = 8;
    cg.cell_size = 0.2 + unit(rng);
    const double p_risk = 0.2 + 0.6 * unit(rng);
    for (int k = 0; k < 64; ++k) {
      const double x = unit(rng);
      cg.cells.push_back(x < 0.1 ? ZoneLabel::Obstacle : x < 0.1 + p_risk ? ZoneLabel::Risk : ZoneLabel::Safe);
    }
    const World world(std::move(cg));
    const RefinedRoadmap g = refine(build_grid_roadmap(world, Connectivity::Eight), world);
    if (g.vertex_count() == 0) continue;
    for (int w = 0; w < 10; ++w) {
      std::vector<VertexId> path{static_cast<VertexId>(unit(rng) * g.vertex_count())};
      const int steps = 1 + static_cast<int>(unit(rng) * 12);
      for (int k = 0; k < steps; ++k) {
        const auto& adj = g.neighbors(path.back());
        if (adj.empty()) break;
        path.push_back(adj[static_cast<std::size_t>(unit(rng) * adj.size())].to);
      }
      const double alpha = 0.25 + 1.75 * unit(rng);
      const double exact = path_cost(g, path, CostModel{alpha}).total_cost;
      const double quad = fixtures::quadrature_cost(g, path, alpha, 1000);
      const double rel = std::abs(exact - quad) / std::max(1e-300, std::abs(quad));
      worst = std::max(worst, path.size() > 1 ? rel : 0.0);
      if (path.size() > 1 && rel > 1e-6) out.fail(fmt::format("path {}: relative error {:.3g}", paths, rel));
      ++paths;
    }
  }
  std::uniform_real_distribution<double> d(0.0, 5.0);
  for (int k = 0; k < 10000; ++k) {
    double d1 = d(rng), d2 = d(rng);
    if (d1 == 0.0 || d2 == 0.0) continue;
    const double joined = segment_cost(0.0, d1 + d2, ZoneLabel::Risk).delta_cost;
    const double split =
        segment_cost(0.0, d1, ZoneLabel::Risk).delta_cost + segment_cost(0.0, d2, ZoneLabel::Risk).delta_cost;
    if (!(joined > split)) out.fail(fmt::format("no strict split gain at d1={} d2={}", d1, d2));
  }
  if (out.pass) out.detail = fmt::format("{} paths, worst relative error {:.2g}; 10000 split samples", paths, worst);
  return out;
}

// ---------------------------------------------------------------------------

double median_seconds(const std::function<void()>& f, int reps) {
  std::vector<double> xs;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    f();
    xs.push_back(seconds_since(t0));
  }
  std::sort(xs.begin(), xs.end());
  return xs[xs.size() / 2];
}

struct CoastalRuns {
  Scenario scenario;
  BuiltScenario built;
  PathResult inc, dj, minrisk;
};

Outcome coastal_orderings(CoastalRuns& c) {
  Outcome out;
  const auto t0 = Clock::now();
  c.scenario = coastal_scenario();
  c.built = build_scenario(c.scenario);
  const BuiltScenario& b = c.built;
  const PlannerOptions& o = c.scenario.options;

  const double t_inc = median_seconds([&] { c.inc = run_planner(b, Algorithm::Incremental, o); }, 9);
  const double t_dj = median_seconds([&] { c.dj = run_planner(b, Algorithm::Dijkstra, o); }, 9);
  c.minrisk = run_planner(b, Algorithm::MinRisk, o);
  PathResult pre;
  const double t_pre = median_seconds([&] { pre = run_planner(b, Algorithm::Precompute, o); }, 3);
  const double apsp_share = pre.stats.apsp_seconds / pre.stats.wall_seconds;

  if (!c.inc.found() || !pre.found() || !c.dj.found()) {
    out.fail("a planner did not reach the goal");
    return out;
  }
  if (std::abs(pre.cost() - c.inc.cost()) > 1e-9 * std::max(1.0, c.inc.cost())) {
    out.fail(fmt::format("precompute cost {:.9f} vs incremental {:.9f}", pre.cost(), c.inc.cost()));
  }
  const double ratio_a = t_inc / t_dj, ratio_b = t_pre / t_inc;
  if (!(ratio_a < 20.0)) out.fail(fmt::format("incremental/dijkstra = {:.2f}", ratio_a));
  if (!(ratio_b >= 10.0)) out.fail(fmt::format("precompute/incremental = {:.1f}", ratio_b));
  if (!(apsp_share >= 0.8)) out.fail(fmt::format("apsp share {:.1f}%", 100 * apsp_share));
  const double elapsed = seconds_since(t0);
  if (elapsed >= 600.0) out.fail(fmt::format("took {:.0f} s", elapsed));
  if (out.pass) {
    out.detail = fmt::format(
        "{} vertices, n_B {}: incremental/dijkstra {:.2f}, precompute/incremental {:.0f}, apsp {:.1f}%",
        b.refined.vertex_count(), b.refined.border_count(), ratio_a, ratio_b, 100 * apsp_share);
  }
  return out;
}

Outcome interpolation(const CoastalRuns& c) {
  Outcome out;
  if (!c.inc.found() || !c.dj.found() || !c.minrisk.found()) {
    out.fail("coastal runs missing");
    return out;
  }
  const double r_inc = c.inc.breakdown.risk_time(), r_dj = c.dj.breakdown.risk_time();
  const double l_inc = c.inc.length(), l_mr = c.minrisk.length();
  if (c.dj.path == c.minrisk.path) {
    out.detail = "baselines coincide";
    return out;
  }
  if (!(r_inc < r_dj)) out.fail(fmt::format("risk time {:.4f} vs shortest path {:.4f}", r_inc, r_dj));
  if (!(l_inc < l_mr)) out.fail(fmt::format("length {:.4f} vs min-risk path {:.4f}", l_inc, l_mr));
  if (out.pass) {
    out.detail = fmt::format("risk time {:.3f} < {:.3f}, length {:.3f} < {:.3f}", r_inc, r_dj, l_inc, l_mr);
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome golden_trace() {
  Outcome out;
  std::ifstream in(std::string(RAMP_GOLDEN_DIR) + "/fig1_queue.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string expected = fixtures::strip_comments(ss.str());
  if (expected.empty()) {
    out.fail("golden file missing");
    return out;
  }
  const RefinedRoadmap g = fixtures::fig1();
  SearchOptions o;
  o.capture_trace = true;
  RaspSearch search(g, o);
  search.run(fixtures::kXs, fixtures::kZ);
  const std::string got = fixtures::queue_snapshots(search.trace());
  if (got != expected) out.fail("queue evolution differs:\n" + got);
  bool evicted = false;
  for (const auto& t : search.trace()) {
    evicted = evicted || (t.event == TraceEvent::Evict && t.key.vertex == fixtures::kZ && t.key.phi == fixtures::kX1);
  }
  if (!evicted) out.fail("z via x1 never dominated");
  if (out.pass) out.detail = "queue evolution matches, z via x1 evicted";
  return out;
}

}  // namespace

int main() {
  int failures = 0;
  Clock::time_point start;
  auto report = [&](int n, const char* name, const Outcome& o) {
    fmt::print("{} criterion {}: {} ({}) [{:.1f} s]\n", o.pass ? "PASS" : "FAIL", n, name, o.detail,
               seconds_since(start));
    std::fflush(stdout);
    failures += !o.pass;
  };
  auto guarded = [](const std::function<Outcome()>& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      Outcome o;
      o.fail(std::string("exception: ") + e.what());
      return o;
    }
  };

  std::vector<OracleRun> runs;
  CoastalRuns coastal;
  start = Clock::now();
  report(1, "fixture exactness", guarded(fig1_exactness));
  report(2, "oracle equivalence", guarded([&] { return oracle_equivalence(runs); }));
  report(3, "dijkstra reduction", guarded(dijkstra_reduction));
  report(4, "domination invariants", guarded([&] { return domination_invariants(runs); }));
  report(5, "cost function", guarded(cost_function));
  report(6, "coastal timing orderings", guarded([&] { return coastal_orderings(coastal); }));
  report(7, "interpolation", guarded([&] { return interpolation(coastal); }));
  report(8, "golden trace", guarded(golden_trace));
  return failures == 0 ? 0 : 1;
}
