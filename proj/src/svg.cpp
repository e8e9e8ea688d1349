#include "ramp/svg.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>

#include "ramp/errors.hpp"

namespace ramp {

namespace {

constexpr double kCanvas = 800.0;
constexpr const char* kSafeColor = "#2e7d32";
constexpr const char* kRiskColor = "#1565c0";
constexpr const char* kRiskFill = "#bbdefb";
constexpr const char* kObstacleFill = "#555555";

struct Frame {
  Box box;
  double scale = 1.0;
  double margin = 20.0;

  double x(double wx) const { return margin + (wx - box.min.x) * scale; }
  double y(double wy) const { return margin + (wy - box.min.y) * scale; }
  double width() const { return 2 * margin + box.width() * scale; }
  double height() const { return 2 * margin + box.height() * scale; }
};

Frame make_frame(const World* world, const RefinedRoadmap& g) {
  Frame f;
  if (world) {
    f.box = world->bounds();
  } else {
    Box b{{0.0, 0.0}, {0.0, 0.0}};
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const Point2 p = g.point(v);
      if (v == 0) {
        b = {p, p};
      } else {
        b.min = {std::min(b.min.x, p.x), std::min(b.min.y, p.y)};
        b.max = {std::max(b.max.x, p.x), std::max(b.max.y, p.y)};
      }
    }
    const double pad = std::max({b.width(), b.height(), 1.0}) * 0.05;
    b.min = {b.min.x - pad, b.min.y - pad};
    b.max = {b.max.x + pad, b.max.y + pad};
    f.box = b;
  }
  f.scale = kCanvas / std::max({f.box.width(), f.box.height(), 1e-9});
  return f;
}

void polygon(std::string& out, const Frame& f, const Polygon& p, const char* fill) {
  out += "<polygon points=\"";
  for (std::size_t i = 0; i < p.ring.size(); ++i) {
    out += fmt::format("{}{:.3f},{:.3f}", i ? " " : "", f.x(p.ring[i].x), f.y(p.ring[i].y));
  }
  out += fmt::format("\" fill=\"{}\"/>\n", fill);
}

void draw_grid(std::string& out, const Frame& f, const CellGrid& grid) {
  // one rect per horizontal run of equal labels
  for (int r = 0; r < grid.rows; ++r) {
    int c = 0;
    while (c < grid.cols) {
      const ZoneLabel z = grid.at(r, c);
      int end = c + 1;
      while (end < grid.cols && grid.at(r, end) == z) ++end;
      if (z != ZoneLabel::Safe) {
        const double x0 = grid.origin.x + c * grid.cell_size;
        const double y0 = grid.origin.y + r * grid.cell_size;
        out += fmt::format("<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"{}\"/>\n",
                           f.x(x0), f.y(y0), (end - c) * grid.cell_size * f.scale, grid.cell_size * f.scale,
                           z == ZoneLabel::Obstacle ? kObstacleFill : kRiskFill);
      }
      c = end;
    }
  }
}

void draw_roadmap(std::string& out, const Frame& f, const RefinedRoadmap& g) {
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (const auto& e : g.neighbors(u)) {
      if (e.to < u) continue;
      out += fmt::format(
          "<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"#bdbdbd\" stroke-width=\"1\"/>\n",
          f.x(g.point(u).x), f.y(g.point(u).y), f.x(g.point(e.to).x), f.y(g.point(e.to).y));
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"4\" fill=\"{}\"/>\n", f.x(g.point(v).x),
                       f.y(g.point(v).y), g.is_risk(v) ? kRiskFill : "#e0e0e0");
  }
}

void draw_path(std::string& out, const Frame& f, const RefinedRoadmap& g, const PathResult& r) {
  const char* dash = stroke_dasharray(r.algorithm);
  out += fmt::format("<g class=\"path {}\" fill=\"none\" stroke-width=\"2.5\" stroke-linecap=\"round\"{}>\n",
                     to_string(r.algorithm), *dash ? fmt::format(" stroke-dasharray=\"{}\"", dash) : "");
  std::size_t i = 0;
  while (i + 1 < r.path.size()) {
    const RefinedEdge* e = g.find_edge(r.path[i], r.path[i + 1]);
    const ZoneLabel zone = e ? e->zone : ZoneLabel::Safe;
    std::size_t j = i + 1;
    while (j + 1 < r.path.size()) {
      const RefinedEdge* next = g.find_edge(r.path[j], r.path[j + 1]);
      if ((next ? next->zone : ZoneLabel::Safe) != zone) break;
      ++j;
    }
    out += "<polyline points=\"";
    for (std::size_t k = i; k <= j; ++k) {
      const Point2 p = g.point(r.path[k]);
      out += fmt::format("{}{:.3f},{:.3f}", k == i ? "" : " ", f.x(p.x), f.y(p.y));
    }
    out += fmt::format("\" stroke=\"{}\"/>\n", zone == ZoneLabel::Risk ? kRiskColor : kSafeColor);
    i = j;
  }
  out += "</g>\n";
}

void draw_legend(std::string& out, const Frame& f, const std::vector<PathResult>& results) {
  std::vector<Algorithm> shown;
  for (const auto& r : results) {
    if (r.found() && std::find(shown.begin(), shown.end(), r.algorithm) == shown.end()) shown.push_back(r.algorithm);
  }
  const double x = f.width() + 10;
  double y = f.margin + 10;
  out += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (Algorithm a : shown) {
    const char* dash = stroke_dasharray(a);
    out += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"#000000\" "
                       "stroke-width=\"2.5\"{}/>\n",
                       x, y, x + 30, y, *dash ? fmt::format(" stroke-dasharray=\"{}\"", dash) : "");
    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n", x + 36, y + 4, to_string(a));
    y += 20;
  }
  const std::pair<const char*, const char*> keys[] = {
      {kSafeColor, "safe segment"}, {kRiskColor, "risk segment"}};
  for (const auto& [color, label] : keys) {
    out += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"{}\" "
                       "stroke-width=\"2.5\"/>\n",
                       x, y, x + 30, y, color);
    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n", x + 36, y + 4, label);
    y += 20;
  }
  out += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"30\" height=\"12\" fill=\"{}\"/>\n", x, y - 6, kRiskFill);
  out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">risk zone</text>\n", x + 36, y + 4);
  y += 20;
  out += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"30\" height=\"12\" fill=\"{}\"/>\n", x, y - 6,
                     kObstacleFill);
  out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">obstacle</text>\n", x + 36, y + 4);
  out += "</g>\n";
}

}  // namespace

const char* stroke_dasharray(Algorithm a) {
  switch (a) {
    case Algorithm::Dijkstra: return "8 5";
    case Algorithm::MinRisk: return "1 5";
    default: return "";
  }
}

std::string render_svg(const World* world, const RefinedRoadmap& g, const std::vector<PathResult>& results) {
  const Frame f = make_frame(world, g);
  std::string out;
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\">\n",
      f.width() + 150, f.height(), f.width() + 150, f.height());
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"#ffffff\"/>\n", f.width() + 150,
                     f.height());
  if (world && world->is_grid()) {
    draw_grid(out, f, world->grid());
  } else if (world) {
    for (const auto& p : world->polygons().risk) polygon(out, f, p, kRiskFill);
    for (const auto& p : world->polygons().obstacles) polygon(out, f, p, kObstacleFill);
  } else {
    draw_roadmap(out, f, g);
  }
  if (world) {
    out += fmt::format("<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"none\" "
                       "stroke=\"#000000\"/>\n",
                       f.margin, f.margin, f.box.width() * f.scale, f.box.height() * f.scale);
  }
  for (const auto& r : results) {
    if (r.found()) draw_path(out, f, g, r);
  }
  draw_legend(out, f, results);
  out += "</svg>\n";
  return out;
}

void write_text_file(const std::filesystem::path& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot open " + file.string() + " for writing");
  out << content;
  if (!out) throw Error("failed writing " + file.string());
}

}  // namespace ramp
