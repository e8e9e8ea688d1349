#include <gtest/gtest.h>

#include <random>

#include "ramp/errors.hpp"
#include "ramp/world.hpp"

using namespace ramp;

namespace {

World grid_world(const std::string& text) { return World(parse_ascii_grid(text)); }

World strip_world() {
  PolygonSet ps;
  ps.bounds = {{0, 0}, {10, 10}};
  ps.obstacles.push_back(Polygon{{{4, 6}, {6, 6}, {6, 8}, {4, 8}}});
  ps.risk.push_back(Polygon{{{3, 1}, {7, 1}, {7, 4}, {3, 4}}});
  return World(std::move(ps));
}

}  // namespace

TEST(World, ClassifyUniformGridCenter) {
  const World w = grid_world("grid 3 3 1\n...\n...\n...\n");
  EXPECT_EQ(classify_point(w, {1.5, 1.5}), ZoneLabel::Safe);
}

TEST(World, ClassifyGridCellsAndBoundaries) {
  const World w = grid_world("grid 2 2 1\n.~\n#~\n");
  EXPECT_EQ(w.classify({0.5, 0.5}), ZoneLabel::Safe);
  EXPECT_EQ(w.classify({1.5, 0.5}), ZoneLabel::Risk);
  EXPECT_EQ(w.classify({0.5, 1.5}), ZoneLabel::Obstacle);
  EXPECT_EQ(w.classify({1.5, 1.0}), ZoneLabel::Risk);   // between two risk cells
  EXPECT_EQ(w.classify({1.0, 0.5}), ZoneLabel::Safe);   // safe/risk boundary
  EXPECT_EQ(w.classify({0.5, 1.0}), ZoneLabel::Safe);   // safe/obstacle boundary is free
}

TEST(World, ClassifyOutOfBounds) {
  const World w = grid_world("grid 1 1 1\n.\n");
  EXPECT_THROW(w.classify({2, 0.5}), OutOfBounds);
  EXPECT_THROW(strip_world().classify({-1, 5}), OutOfBounds);
}

TEST(World, ClassifyPolygons) {
  const World w = strip_world();
  EXPECT_EQ(w.classify({5, 2}), ZoneLabel::Risk);
  EXPECT_EQ(w.classify({5, 7}), ZoneLabel::Obstacle);
  EXPECT_EQ(w.classify({1, 1}), ZoneLabel::Safe);
  EXPECT_EQ(w.classify({3, 2}), ZoneLabel::Safe);  // on the risk boundary
  EXPECT_EQ(w.classify({7, 4}), ZoneLabel::Safe);  // risk corner
}

TEST(World, RejectsRiskOverlappingObstacle) {
  PolygonSet ps;
  ps.obstacles.push_back(Polygon{{{0, 0}, {2, 0}, {2, 2}, {0, 2}}});
  ps.risk.push_back(Polygon{{{1, 1}, {3, 1}, {3, 3}, {1, 3}}});
  EXPECT_THROW(World{ps}, InvalidParameter);
}

TEST(World, RejectsBadGrid) {
  CellGrid g;
  g.rows = 2;
  g.cols = 2;
  g.cells.assign(3, ZoneLabel::Safe);
  EXPECT_THROW(World{g}, InvalidParameter);
  g.cells.assign(4, ZoneLabel::Safe);
  g.cell_size = 0.0;
  EXPECT_THROW(World{g}, InvalidParameter);
}

TEST(World, CrossingsUniform) {
  const World w = grid_world("grid 1 3 1\n...\n");
  EXPECT_TRUE(segment_crossings(w, {0.5, 0.5}, {2.5, 0.5}).empty());
}

TEST(World, CrossingSingleBoundary) {
  const World w = grid_world("grid 1 2 1\n.~\n");
  const auto c = segment_crossings(w, {0.5, 0.5}, {1.5, 0.5});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_DOUBLE_EQ(c[0].param, 0.5);
  EXPECT_EQ(c[0].direction, CrossingDirection::SafeToRisk);
}

TEST(World, CrossingsThroughRiskStrip) {
  const World w = grid_world("grid 1 3 1\n.~.\n");
  const auto c = segment_crossings(w, {0.0, 0.5}, {3.0, 0.5});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(c[0].param, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(c[1].param, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(c[0].direction, CrossingDirection::SafeToRisk);
  EXPECT_EQ(c[1].direction, CrossingDirection::RiskToSafe);
}

TEST(World, CrossingsPolygonExact) {
  const World w = strip_world();
  const auto c = w.crossings({1, 2}, {9, 2});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_DOUBLE_EQ(c[0].param, 0.25);
  EXPECT_DOUBLE_EQ(c[1].param, 0.75);
}

TEST(World, CrossingThroughPolygonVertexIsMerged) {
  PolygonSet ps;
  ps.bounds = {{-5, -5}, {5, 5}};
  ps.risk.push_back(Polygon{{{0, -1}, {1, 0}, {0, 1}, {-1, 0}}});  // diamond
  const World w(ps);
  // enters through the left vertex, leaves through the right vertex
  const auto c = w.crossings({-3, 0}, {3, 0});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(c[0].param, 2.0 / 6.0, 1e-12);
  EXPECT_NEAR(c[1].param, 4.0 / 6.0, 1e-12);
  // grazes the top vertex without entering
  EXPECT_TRUE(w.crossings({-3, 1}, {3, 1}).empty());
}

TEST(World, CollisionDetection) {
  const World w = grid_world("grid 2 2 1\n.#\n..\n");
  EXPECT_THROW(segment_crossings(w, {0.5, 0.5}, {1.5, 0.5}), CollisionError);
  // diagonal passes the obstacle's corner: supercover counts it
  EXPECT_FALSE(w.segment_free({0.5, 0.5}, {1.5, 1.5}));
  EXPECT_TRUE(w.segment_free({0.5, 0.5}, {0.5, 1.5}));
  EXPECT_THROW(strip_world().crossings({5, 5}, {5, 9}), CollisionError);
  // touching an obstacle edge collides
  EXPECT_FALSE(strip_world().segment_free({2, 5}, {4, 7}));
  EXPECT_TRUE(strip_world().segment_free({2, 5}, {3.9, 7}));
}

TEST(World, ReversedCrossingsMirror) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  const World polys = strip_world();
  const World grid = grid_world("grid 5 5 2\n..~~.\n.~~~.\n..~..\n.....\n~~.~~\n");
  for (const World* w : {&polys, &grid}) {
    int checked = 0;
    while (checked < 300) {
      const Point2 a{coord(rng), coord(rng)};
      const Point2 b{coord(rng), coord(rng)};
      if (!w->segment_free(a, b)) continue;
      const auto fwd = w->crossings(a, b);
      const auto back = w->crossings(b, a);
      ASSERT_EQ(fwd.size(), back.size());
      for (std::size_t i = 0; i < fwd.size(); ++i) {
        const auto& f = fwd[i];
        const auto& r = back[back.size() - 1 - i];
        EXPECT_NEAR(f.param, 1.0 - r.param, 1e-9);
        EXPECT_NE(f.direction, r.direction);
      }
      ++checked;
    }
  }
}

TEST(World, ClassificationConstantBetweenCrossings) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  const World polys = strip_world();
  const World grid = grid_world("grid 5 5 2\n..~~.\n.~~~.\n..~..\n.....\n~~.~~\n");
  for (const World* w : {&polys, &grid}) {
    int checked = 0;
    while (checked < 200) {
      const Point2 a{coord(rng), coord(rng)};
      const Point2 b{coord(rng), coord(rng)};
      if (!w->segment_free(a, b)) continue;
      const auto cs = w->crossings(a, b);
      std::vector<double> cuts{0.0};
      for (const auto& c : cs) cuts.push_back(c.param);
      cuts.push_back(1.0);
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        // the zone implied by the crossing directions
        ZoneLabel expected = w->leading_zone(a, b);
        if (k > 0) expected = cs[k - 1].direction == CrossingDirection::SafeToRisk ? ZoneLabel::Risk : ZoneLabel::Safe;
        const double lo = cuts[k], hi = cuts[k + 1];
        for (int s = 1; s < 50; ++s) {
          const double t = lo + (hi - lo) * s / 50.0;
          const ZoneLabel z = w->classify(lerp(a, b, t));
          // measure-zero boundary points (grid lines) classify Safe
          if (z != expected) {
            EXPECT_EQ(z, ZoneLabel::Safe);
            EXPECT_EQ(expected, ZoneLabel::Risk);
          }
        }
        int agree = 0;
        for (int s = 1; s < 50; ++s) agree += w->classify(lerp(a, b, lo + (hi - lo) * (s + 0.37) / 50.5)) == expected;
        EXPECT_GE(agree, 45);
      }
      ++checked;
    }
  }
}

TEST(World, RiskOffsetAgainstDistanceTransform) {
  // obstacle strip along the left edge, one cell wide, 20 x 20 cells of size 1
  const std::vector<Polygon> obs{Polygon{{{0, 0}, {1, 0}, {1, 20}, {0, 20}}}};
  const World w = risk_offset_world(obs, 2.0, {{0, 0}, {20, 20}}, 1.0);
  const CellGrid& g = w.grid();
  ASSERT_EQ(g.rows, 20);
  ASSERT_EQ(g.cols, 20);
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      // brute force: minimum distance from the center to any obstacle cell's closed square
      const double cx = c + 0.5, cy = r + 0.5;
      double best = 1e300;
      bool inside = false;
      for (int rr = 0; rr < 20; ++rr) {
        const double dx = std::max({0.0, 0.0 - cx, cx - 1.0});
        const double dy = std::max({0.0, rr - cy, cy - (rr + 1.0)});
        best = std::min(best, std::hypot(dx, dy));
        inside |= cx > 0.0 && cx < 1.0 && cy > rr && cy < rr + 1.0;
      }
      const ZoneLabel expected = inside ? ZoneLabel::Obstacle : best > 2.0 ? ZoneLabel::Risk : ZoneLabel::Safe;
      EXPECT_EQ(g.at(r, c), expected) << r << "," << c;
    }
  }
}

TEST(World, RiskOffsetEdgeCases) {
  const std::vector<Polygon> obs{Polygon{{{4, 4}, {6, 4}, {6, 6}, {4, 6}}}};
  const Box box{{0, 0}, {10, 10}};
  const World big = risk_offset_world(obs, 100.0, box, 0.5);
  for (ZoneLabel z : big.grid().cells) EXPECT_NE(z, ZoneLabel::Risk);
  const World empty = risk_offset_world({}, 1.0, box, 0.5);
  for (ZoneLabel z : empty.grid().cells) EXPECT_EQ(z, ZoneLabel::Risk);
  EXPECT_THROW(risk_offset_world(obs, 0.0, box, 0.5), InvalidParameter);
  EXPECT_THROW(risk_offset_world(obs, -1.0, box, 0.5), InvalidParameter);
}

TEST(World, RiskOffsetFarPointIsRisk) {
  const std::vector<Polygon> obs{Polygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}};
  const World w = risk_offset_world(obs, 2.0, {{0, 0}, {10, 10}}, 0.5);
  EXPECT_EQ(w.classify({9.25, 9.25}), ZoneLabel::Risk);
  EXPECT_EQ(w.classify({1.75, 0.25}), ZoneLabel::Safe);
  EXPECT_EQ(w.classify({0.25, 0.25}), ZoneLabel::Obstacle);
}

TEST(World, RiskOffsetMonotoneInOffset) {
  const std::vector<Polygon> obs{Polygon{{{2, 2}, {5, 3}, {3, 6}}}, Polygon{{{7, 7}, {9, 7}, {8, 9}}}};
  const Box box{{0, 0}, {10, 10}};
  const World w1 = risk_offset_world(obs, 1.0, box, 0.25);
  for (double d : {1.5, 2.0, 3.5}) {
    const World w2 = risk_offset_world(obs, d, box, 0.25);
    const auto& a = w1.grid().cells;
    const auto& b = w2.grid().cells;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == ZoneLabel::Safe) EXPECT_NE(b[i], ZoneLabel::Risk);
    }
  }
}

TEST(World, AsciiRoundTrip) {
  const std::string text = "grid 2 3 0.5\n#.~\n~~.\n";
  const CellGrid g = parse_ascii_grid(text);
  EXPECT_EQ(g.rows, 2);
  EXPECT_EQ(g.cols, 3);
  EXPECT_DOUBLE_EQ(g.cell_size, 0.5);
  EXPECT_EQ(g.at(0, 0), ZoneLabel::Obstacle);
  EXPECT_EQ(g.at(1, 2), ZoneLabel::Safe);
  EXPECT_EQ(format_ascii_grid(g), text);
}

TEST(World, AsciiErrorsCarryPosition) {
  try {
    parse_ascii_grid("grid 2 3 1\n...\n.x.\n", "map.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 2u);
    EXPECT_NE(std::string(e.what()).find("map.txt:3:2"), std::string::npos);
  }
  EXPECT_THROW(parse_ascii_grid("grid 2 3 1\n...\n"), ParseError);
  EXPECT_THROW(parse_ascii_grid("grd 1 1 1\n.\n"), ParseError);
  EXPECT_THROW(parse_ascii_grid("grid 1 2 1\n...\n"), ParseError);
  EXPECT_THROW(parse_ascii_grid("grid 1 1 0\n.\n"), ParseError);
}
