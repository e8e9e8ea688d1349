#include "ramp/scenario.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ramp/errors.hpp"

namespace ramp {

using nlohmann::json;

const char* to_string(WorldKind k) {
  switch (k) {
    case WorldKind::Graph: return "graph";
    case WorldKind::Grid: return "grid";
    case WorldKind::Polygons: return "polygons";
    case WorldKind::Coastal: return "coastal";
  }
  return "?";
}

const char* to_string(RoadmapKind k) {
  switch (k) {
    case RoadmapKind::Grid: return "grid";
    case RoadmapKind::Halton: return "halton";
    case RoadmapKind::Explicit: return "explicit";
  }
  return "?";
}

namespace {

/// Structural error at a JSON pointer; converted to a ParseError with a
/// text position by parse_scenario.
struct SchemaError {
  std::string pointer;
  std::string message;
};

// ---------------------------------------------------------------------------
// Byte offsets of every value in an already validated JSON document, keyed by
// JSON pointer.

class PositionIndex {
 public:
  explicit PositionIndex(std::string_view text) : text_(text) { value(""); }

  std::size_t find(std::string pointer) const {
    while (true) {
      if (auto it = offsets_.find(pointer); it != offsets_.end()) return it->second;
      const auto slash = pointer.rfind('/');
      if (slash == std::string::npos) return 0;
      pointer.resize(slash);
    }
  }

 private:
  void ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string string_token() {
    std::string out;
    ++pos_;  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') {
        out += text_[pos_++];
      }
      if (pos_ < text_.size()) out += text_[pos_++];
    }
    ++pos_;
    return out;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char ch : key) {
      if (ch == '~') {
        out += "~0";
      } else if (ch == '/') {
        out += "~1";
      } else {
        out += ch;
      }
    }
    return out;
  }

  void value(const std::string& pointer) {
    ws();
    offsets_[pointer] = pos_;
    if (pos_ >= text_.size()) return;
    const char ch = text_[pos_];
    if (ch == '{') {
      ++pos_;
      ws();
      if (text_[pos_] == '}') {
        ++pos_;
        return;
      }
      while (true) {
        ws();
        const std::size_t key_pos = pos_;
        const std::string key = string_token();
        const std::string child = pointer + "/" + escape(key);
        ws();
        ++pos_;  // ':'
        value(child);
        offsets_.try_emplace(child + "#key", key_pos);
        ws();
        if (text_[pos_++] == '}') return;
      }
    }
    if (ch == '[') {
      ++pos_;
      ws();
      if (text_[pos_] == ']') {
        ++pos_;
        return;
      }
      for (std::size_t i = 0;; ++i) {
        value(pointer + "/" + std::to_string(i));
        ws();
        if (text_[pos_++] == ']') return;
      }
    }
    if (ch == '"') {
      string_token();
      return;
    }
    while (pos_ < text_.size() && std::string_view(",]} \t\r\n").find(text_[pos_]) == std::string_view::npos) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> offsets_;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// ---------------------------------------------------------------------------
// Typed readers.

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }

void expect_object(const json& j, const std::string& ptr, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw SchemaError{ptr, "expected an object"};
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw SchemaError{child(ptr, key) + "#key", "unknown field '" + key + "'"};
  }
}

const json& require(const json& obj, const std::string& ptr, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError{ptr, std::string("missing field '") + key + "'"};
  return *it;
}

double as_number(const json& j, const std::string& ptr) {
  if (!j.is_number()) throw SchemaError{ptr, "expected a number"};
  return j.get<double>();
}

std::uint64_t as_uint(const json& j, const std::string& ptr) {
  if (!j.is_number_unsigned()) throw SchemaError{ptr, "expected a non-negative integer"};
  return j.get<std::uint64_t>();
}

bool as_bool(const json& j, const std::string& ptr) {
  if (!j.is_boolean()) throw SchemaError{ptr, "expected true or false"};
  return j.get<bool>();
}

std::string as_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw SchemaError{ptr, "expected a string"};
  return j.get<std::string>();
}

Point2 as_point(const json& j, const std::string& ptr) {
  if (!j.is_array() || j.size() != 2) throw SchemaError{ptr, "expected a point [x, y]"};
  return {as_number(j[0], ptr + "/0"), as_number(j[1], ptr + "/1")};
}

Polygon as_polygon(const json& j, const std::string& ptr) {
  if (!j.is_array() || j.size() < 3) throw SchemaError{ptr, "expected a polygon of at least 3 points"};
  Polygon p;
  for (std::size_t i = 0; i < j.size(); ++i) p.ring.push_back(as_point(j[i], ptr + "/" + std::to_string(i)));
  return p;
}

std::vector<Polygon> as_polygons(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError{ptr, "expected a list of polygons"};
  std::vector<Polygon> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_polygon(j[i], ptr + "/" + std::to_string(i)));
  return out;
}

ZoneLabel as_zone(const json& j, const std::string& ptr, bool allow_obstacle) {
  const std::string s = as_string(j, ptr);
  if (s == "safe") return ZoneLabel::Safe;
  if (s == "risk") return ZoneLabel::Risk;
  if (s == "obstacle" && allow_obstacle) return ZoneLabel::Obstacle;
  throw SchemaError{ptr, "unknown zone '" + s + "'"};
}

const char* zone_name(ZoneLabel z) {
  switch (z) {
    case ZoneLabel::Safe: return "safe";
    case ZoneLabel::Risk: return "risk";
    case ZoneLabel::Obstacle: return "obstacle";
  }
  return "?";
}

Endpoint as_endpoint(const json& j, const std::string& ptr) {
  if (j.is_number_unsigned()) {
    const auto id = j.get<std::uint64_t>();
    if (id >= kNoVertex) throw SchemaError{ptr, "vertex id out of range"};
    return static_cast<VertexId>(id);
  }
  if (j.is_array()) return as_point(j, ptr);
  throw SchemaError{ptr, "expected a vertex id or a point [x, y]"};
}

WorldSpec read_world(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError{ptr, "expected an object"};
  WorldSpec w;
  const std::string kind = as_string(require(j, ptr, "kind"), child(ptr, "kind"));
  if (kind == "graph") {
    w.kind = WorldKind::Graph;
    expect_object(j, ptr, {"kind"});
  } else if (kind == "grid") {
    w.kind = WorldKind::Grid;
    expect_object(j, ptr, {"kind", "rows", "file", "cell_size", "origin"});
    if (j.contains("rows") == j.contains("file")) {
      throw SchemaError{ptr, "grid world needs exactly one of 'rows' or 'file'"};
    }
    if (j.contains("rows")) {
      const json& rows = j["rows"];
      if (!rows.is_array() || rows.empty()) throw SchemaError{child(ptr, "rows"), "expected a list of rows"};
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string rp = child(ptr, "rows/" + std::to_string(i));
        w.rows.push_back(as_string(rows[i], rp));
        if (w.rows.back().size() != w.rows.front().size() || w.rows.back().empty()) {
          throw SchemaError{rp, "rows must be non-empty and equally long"};
        }
        if (w.rows.back().find_first_not_of("#.~") != std::string::npos) {
          throw SchemaError{rp, "rows may only contain '#', '.' and '~'"};
        }
      }
      if (j.contains("cell_size")) w.cell_size = as_number(j["cell_size"], child(ptr, "cell_size"));
      if (!(w.cell_size > 0.0)) throw SchemaError{child(ptr, "cell_size"), "cell_size must be positive"};
    } else {
      w.grid_file = as_string(j["file"], child(ptr, "file"));
      if (j.contains("cell_size")) throw SchemaError{child(ptr, "cell_size"), "cell_size comes from the grid file"};
    }
    if (j.contains("origin")) w.origin = as_point(j["origin"], child(ptr, "origin"));
  } else if (kind == "polygons") {
    w.kind = WorldKind::Polygons;
    expect_object(j, ptr, {"kind", "bounds", "obstacles", "risk", "risk_offset", "resolution"});
    if (j.contains("bounds")) {
      const json& b = j["bounds"];
      if (!b.is_array() || b.size() != 2) throw SchemaError{child(ptr, "bounds"), "expected [[x0, y0], [x1, y1]]"};
      w.bounds = Box{as_point(b[0], child(ptr, "bounds/0")), as_point(b[1], child(ptr, "bounds/1"))};
    }
    if (j.contains("obstacles")) w.obstacles = as_polygons(j["obstacles"], child(ptr, "obstacles"));
    if (j.contains("risk")) w.risk = as_polygons(j["risk"], child(ptr, "risk"));
    if (j.contains("risk_offset")) {
      if (j.contains("risk")) throw SchemaError{child(ptr, "risk_offset"), "use either 'risk' or 'risk_offset'"};
      w.risk_offset = as_number(j["risk_offset"], child(ptr, "risk_offset"));
      if (!(*w.risk_offset > 0.0)) throw SchemaError{child(ptr, "risk_offset"), "risk_offset must be positive"};
      if (j.contains("resolution")) w.resolution = as_number(j["resolution"], child(ptr, "resolution"));
      if (!(w.resolution > 0.0)) throw SchemaError{child(ptr, "resolution"), "resolution must be positive"};
    } else if (j.contains("resolution")) {
      throw SchemaError{child(ptr, "resolution"), "resolution only applies with risk_offset"};
    }
  } else if (kind == "coastal") {
    w.kind = WorldKind::Coastal;
    expect_object(j, ptr, {"kind", "seed", "cells", "cell_size", "offset", "islands"});
    if (j.contains("seed")) w.coastal.seed = as_uint(j["seed"], child(ptr, "seed"));
    if (j.contains("cells")) w.coastal.cells = static_cast<int>(as_uint(j["cells"], child(ptr, "cells")));
    if (j.contains("cell_size")) w.coastal.cell_size = as_number(j["cell_size"], child(ptr, "cell_size"));
    if (j.contains("offset")) w.coastal.offset = as_number(j["offset"], child(ptr, "offset"));
    if (j.contains("islands")) w.coastal.islands = static_cast<int>(as_uint(j["islands"], child(ptr, "islands")));
  } else {
    throw SchemaError{child(ptr, "kind"), "unknown world kind '" + kind + "'"};
  }
  return w;
}

RoadmapSpec read_roadmap(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError{ptr, "expected an object"};
  RoadmapSpec r;
  const std::string kind = as_string(require(j, ptr, "kind"), child(ptr, "kind"));
  if (kind == "grid") {
    r.kind = RoadmapKind::Grid;
    expect_object(j, ptr, {"kind", "connectivity"});
    if (j.contains("connectivity")) {
      const auto c = as_uint(j["connectivity"], child(ptr, "connectivity"));
      if (c != 4 && c != 8) throw SchemaError{child(ptr, "connectivity"), "connectivity must be 4 or 8"};
      r.connectivity = c == 4 ? Connectivity::Four : Connectivity::Eight;
    }
  } else if (kind == "halton") {
    r.kind = RoadmapKind::Halton;
    expect_object(j, ptr, {"kind", "n", "radius", "offset"});
    r.halton_n = as_uint(require(j, ptr, "n"), child(ptr, "n"));
    r.halton_radius = as_number(require(j, ptr, "radius"), child(ptr, "radius"));
    if (!(r.halton_radius > 0.0)) throw SchemaError{child(ptr, "radius"), "radius must be positive"};
    if (j.contains("offset")) {
      const json& o = j["offset"];
      if (!o.is_array() || o.size() != 2) throw SchemaError{child(ptr, "offset"), "expected [base2, base3]"};
      r.halton_offsets = {as_uint(o[0], child(ptr, "offset/0")), as_uint(o[1], child(ptr, "offset/1"))};
    }
  } else if (kind == "explicit") {
    r.kind = RoadmapKind::Explicit;
    expect_object(j, ptr, {"kind", "vertices", "edges"});
    const std::string vptr = child(ptr, "vertices");
    const json& vs = require(j, ptr, "vertices");
    if (!vs.is_array() || vs.empty()) throw SchemaError{vptr, "expected a non-empty list of vertices"};
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string p = vptr + "/" + std::to_string(i);
      expect_object(vs[i], p, {"x", "y", "zone"});
      ExplicitVertex v;
      v.p = {as_number(require(vs[i], p, "x"), child(p, "x")), as_number(require(vs[i], p, "y"), child(p, "y"))};
      if (vs[i].contains("zone")) v.zone = as_zone(vs[i]["zone"], child(p, "zone"), false);
      r.vertices.push_back(v);
    }
    const std::string eptr = child(ptr, "edges");
    const json& es = require(j, ptr, "edges");
    if (!es.is_array()) throw SchemaError{eptr, "expected a list of edges"};
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string p = eptr + "/" + std::to_string(i);
      expect_object(es[i], p, {"u", "v", "length", "zone"});
      ExplicitEdge e;
      const auto u = as_uint(require(es[i], p, "u"), child(p, "u"));
      const auto v = as_uint(require(es[i], p, "v"), child(p, "v"));
      if (u >= r.vertices.size()) throw SchemaError{child(p, "u"), "no such vertex"};
      if (v >= r.vertices.size()) throw SchemaError{child(p, "v"), "no such vertex"};
      e.u = static_cast<VertexId>(u);
      e.v = static_cast<VertexId>(v);
      if (es[i].contains("length")) e.length = as_number(es[i]["length"], child(p, "length"));
      if (es[i].contains("zone")) e.zone = as_zone(es[i]["zone"], child(p, "zone"), false);
      r.edges.push_back(e);
    }
  } else {
    throw SchemaError{child(ptr, "kind"), "unknown roadmap kind '" + kind + "'"};
  }
  return r;
}

PlannerOptions read_options(const json& j, const std::string& ptr) {
  expect_object(j, ptr, {"alpha", "pruning", "trace", "seed", "memory_budget"});
  PlannerOptions o;
  if (j.contains("alpha")) {
    o.alpha = as_number(j["alpha"], child(ptr, "alpha"));
    if (!(o.alpha > 0.0) || !std::isfinite(o.alpha)) throw SchemaError{child(ptr, "alpha"), "alpha must be positive"};
  }
  if (j.contains("pruning")) o.pruning = as_bool(j["pruning"], child(ptr, "pruning"));
  if (j.contains("trace")) o.trace = as_bool(j["trace"], child(ptr, "trace"));
  if (j.contains("seed")) o.seed = as_uint(j["seed"], child(ptr, "seed"));
  if (j.contains("memory_budget")) o.memory_budget = as_uint(j["memory_budget"], child(ptr, "memory_budget"));
  return o;
}

Scenario read_scenario(const json& j) {
  expect_object(j, "", {"name", "world", "roadmap", "start", "goal", "options"});
  Scenario s;
  if (j.contains("name")) s.name = as_string(j["name"], "/name");
  s.world = read_world(require(j, "", "world"), "/world");
  s.roadmap = read_roadmap(require(j, "", "roadmap"), "/roadmap");
  s.start = as_endpoint(require(j, "", "start"), "/start");
  s.goal = as_endpoint(require(j, "", "goal"), "/goal");
  if (j.contains("options")) s.options = read_options(j["options"], "/options");

  const bool graph = s.world.kind == WorldKind::Graph;
  const bool explicit_roadmap = s.roadmap.kind == RoadmapKind::Explicit;
  if (graph && !explicit_roadmap) throw SchemaError{"/roadmap/kind", "a graph world needs an explicit roadmap"};
  if (s.roadmap.kind == RoadmapKind::Grid &&
      (s.world.kind == WorldKind::Polygons && !s.world.risk_offset)) {
    throw SchemaError{"/roadmap/kind", "grid roadmaps need a cell-grid world"};
  }
  if (!graph && explicit_roadmap) {
    for (std::size_t i = 0; i < s.roadmap.edges.size(); ++i) {
      if (s.roadmap.edges[i].zone) {
        throw SchemaError{"/roadmap/edges/" + std::to_string(i) + "/zone",
                          "edge zones are derived from the world geometry"};
      }
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Writers.

json point_json(Point2 p) { return json::array({p.x, p.y}); }

json polygon_json(const Polygon& poly) {
  json out = json::array();
  for (const auto& p : poly.ring) out.push_back(point_json(p));
  return out;
}

json polygons_json(const std::vector<Polygon>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(polygon_json(p));
  return out;
}

json endpoint_json(const Endpoint& e) {
  if (const auto* id = std::get_if<VertexId>(&e)) return *id;
  return point_json(std::get<Point2>(e));
}

json world_json(const WorldSpec& w) {
  json out;
  out["kind"] = to_string(w.kind);
  switch (w.kind) {
    case WorldKind::Graph:
      break;
    case WorldKind::Grid:
      if (w.grid_file.empty()) {
        out["rows"] = w.rows;
        out["cell_size"] = w.cell_size;
      } else {
        out["file"] = w.grid_file;
      }
      out["origin"] = point_json(w.origin);
      break;
    case WorldKind::Polygons:
      if (w.bounds) out["bounds"] = json::array({point_json(w.bounds->min), point_json(w.bounds->max)});
      out["obstacles"] = polygons_json(w.obstacles);
      if (w.risk_offset) {
        out["risk_offset"] = *w.risk_offset;
        out["resolution"] = w.resolution;
      } else {
        out["risk"] = polygons_json(w.risk);
      }
      break;
    case WorldKind::Coastal:
      out["seed"] = w.coastal.seed;
      out["cells"] = w.coastal.cells;
      out["cell_size"] = w.coastal.cell_size;
      out["offset"] = w.coastal.offset;
      out["islands"] = w.coastal.islands;
      break;
  }
  return out;
}

json roadmap_json(const RoadmapSpec& r) {
  json out;
  out["kind"] = to_string(r.kind);
  switch (r.kind) {
    case RoadmapKind::Grid:
      out["connectivity"] = static_cast<int>(r.connectivity);
      break;
    case RoadmapKind::Halton:
      out["n"] = r.halton_n;
      out["radius"] = r.halton_radius;
      out["offset"] = json::array({r.halton_offsets.base2, r.halton_offsets.base3});
      break;
    case RoadmapKind::Explicit: {
      json vs = json::array();
      for (const auto& v : r.vertices) vs.push_back({{"x", v.p.x}, {"y", v.p.y}, {"zone", zone_name(v.zone)}});
      json es = json::array();
      for (const auto& e : r.edges) {
        json je = {{"u", e.u}, {"v", e.v}};
        if (e.length) je["length"] = *e.length;
        if (e.zone) je["zone"] = zone_name(*e.zone);
        es.push_back(je);
      }
      out["vertices"] = vs;
      out["edges"] = es;
      break;
    }
  }
  return out;
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InvalidParameter("cannot read " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

World make_world(const Scenario& s) {
  const WorldSpec& w = s.world;
  switch (w.kind) {
    case WorldKind::Grid: {
      CellGrid g;
      if (w.grid_file.empty()) {
        std::string text = "grid " + std::to_string(w.rows.size()) + " " +
                           std::to_string(w.rows.front().size()) + " 1\n";
        for (const auto& row : w.rows) text += row + "\n";
        g = parse_ascii_grid(text, s.name.empty() ? "<rows>" : s.name);
        g.cell_size = w.cell_size;
      } else {
        const auto path = s.base_dir / w.grid_file;
        g = parse_ascii_grid(read_file(path), path.string());
      }
      g.origin = w.origin;
      return World(std::move(g));
    }
    case WorldKind::Polygons: {
      if (w.risk_offset) {
        const Box b = w.bounds ? *w.bounds : bounding_box(w.obstacles);
        return risk_offset_world(w.obstacles, *w.risk_offset, b, w.resolution);
      }
      PolygonSet ps;
      if (w.bounds) ps.bounds = *w.bounds;
      ps.obstacles = w.obstacles;
      ps.risk = w.risk;
      return World(std::move(ps));
    }
    case WorldKind::Coastal:
      return coastal_world(w.coastal);
    case WorldKind::Graph:
      break;
  }
  throw InternalError("graph scenarios have no world");
}

Roadmap explicit_roadmap(const RoadmapSpec& r, const World* world) {
  Roadmap g;
  for (const auto& v : r.vertices) {
    ZoneLabel zone = v.zone;
    if (world) {
      zone = world->classify(v.p);
      if (zone == ZoneLabel::Obstacle) throw CollisionError("explicit vertex lies in an obstacle");
    }
    g.add_vertex(v.p, zone);
  }
  for (const auto& e : r.edges) {
    if (world && !world->segment_free(g.point(e.u), g.point(e.v))) {
      throw CollisionError("explicit edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                           " crosses an obstacle");
    }
    const double len = e.length ? *e.length : distance(g.point(e.u), g.point(e.v));
    g.add_edge(e.u, e.v, len, world ? std::nullopt : e.zone);
  }
  return g;
}

VertexId resolve(const Endpoint& e, const Roadmap& g, const World* world, const char* what) {
  if (const auto* id = std::get_if<VertexId>(&e)) {
    if (*id >= g.vertex_count()) {
      throw InvalidQuery(std::string(what) + " vertex " + std::to_string(*id) + " does not exist");
    }
    return *id;
  }
  const Point2 p = std::get<Point2>(e);
  if (world && world->classify(p) == ZoneLabel::Obstacle) {
    throw InvalidQuery(std::string(what) + " point lies in an obstacle");
  }
  if (g.vertex_count() == 0) throw EmptyRoadmap("roadmap has no vertices");
  return g.nearest_vertex(p);
}

}  // namespace

Scenario parse_scenario(std::string_view text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = line_column(text, offset);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(source, line, col, msg);
  }
  try {
    return read_scenario(j);
  } catch (const SchemaError& e) {
    const PositionIndex index(text);
    const auto [line, col] = line_column(text, index.find(e.pointer));
    std::string where = e.pointer.substr(0, e.pointer.find('#'));
    throw ParseError(source, line, col, (where.empty() ? "/" : where) + ": " + e.message);
  }
}

Scenario load_scenario(const std::filesystem::path& file) {
  Scenario s = parse_scenario(read_file(file), file.string());
  s.base_dir = file.parent_path();
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  json j;
  if (!s.name.empty()) j["name"] = s.name;
  j["world"] = world_json(s.world);
  j["roadmap"] = roadmap_json(s.roadmap);
  j["start"] = endpoint_json(s.start);
  j["goal"] = endpoint_json(s.goal);
  j["options"] = {{"alpha", s.options.alpha},
                  {"pruning", s.options.pruning}, {"trace", s.options.trace},
                  {"seed", s.options.seed},       {"memory_budget", s.options.memory_budget}};
  return j.dump(2) + "\n";
}

BuiltScenario build_scenario(const Scenario& s) {
  BuiltScenario b;
  b.cost.alpha = s.options.alpha;
  validate(b.cost);
  if (s.world.kind != WorldKind::Graph) b.world.emplace(make_world(s));
  const World* world = b.world ? &*b.world : nullptr;
  if (!world && s.roadmap.kind != RoadmapKind::Explicit) {
    throw InvalidParameter("graph worlds need an explicit roadmap");
  }
  switch (s.roadmap.kind) {
    case RoadmapKind::Grid:
      if (!world->is_grid()) throw InvalidParameter("grid roadmaps need a cell-grid world");
      b.roadmap = build_grid_roadmap(*world, s.roadmap.connectivity);
      break;
    case RoadmapKind::Halton:
      b.roadmap = build_halton_roadmap(*world, s.roadmap.halton_n, s.roadmap.halton_radius, s.roadmap.halton_offsets);
      break;
    case RoadmapKind::Explicit:
      b.roadmap = explicit_roadmap(s.roadmap, world);
      break;
  }
  if (b.roadmap.vertex_count() == 0) throw EmptyRoadmap("roadmap has no vertices");
  b.refined = world ? refine(b.roadmap, *world) : refine(b.roadmap);
  b.start = resolve(s.start, b.roadmap, world, "start");
  b.goal = resolve(s.goal, b.roadmap, world, "goal");
  return b;
}

Scenario fig1_scenario() {
  Scenario s;
  s.name = "fig1";
  s.world.kind = WorldKind::Graph;
  s.roadmap.kind = RoadmapKind::Explicit;
  // x_s, x1, x2, y, z on a line-ish embedding whose distances match the lengths
  s.roadmap.vertices = {{{0.0, 0.0}, ZoneLabel::Safe},
                        {{0.5, 0.0}, ZoneLabel::Safe},
                        {{3.0, 0.0}, ZoneLabel::Safe},
                        {{2.0, 0.0}, ZoneLabel::Risk},
                        {{2.0, 0.5}, ZoneLabel::Risk}};
  s.roadmap.edges = {{0, 1, 0.5, {}}, {0, 2, 3.0, {}}, {1, 3, 1.5, {}}, {2, 3, 1.0, {}}, {3, 4, 0.5, {}}};
  s.start = VertexId{0};
  s.goal = VertexId{4};
  return s;
}

Scenario coastal_scenario(const CoastalParams& params) {
  Scenario s;
  s.name = "coastal";
  s.world.kind = WorldKind::Coastal;
  s.world.coastal = params;
  s.roadmap.kind = RoadmapKind::Grid;
  s.roadmap.connectivity = Connectivity::Eight;
  const CoastalLayout layout = coastal_layout(params);
  s.start = layout.start;
  s.goal = layout.goal;
  s.options.seed = params.seed;
  return s;
}

json result_document(const PathResult& r, const BuiltScenario& b, const Scenario& s) {
  json out;
  out["algorithm"] = to_string(r.algorithm);
  out["status"] = r.found() ? "found" : "unreachable";
  out["start"] = b.start;
  out["goal"] = b.goal;
  json path = json::array();
  for (VertexId v : r.path) {
    const Point2 p = b.refined.point(v);
    path.push_back({{"id", v}, {"x", p.x}, {"y", p.y}, {"label", to_string(b.refined.label(v))}});
  }
  out["path"] = path;
  if (r.found()) {
    json ex = json::array();
    for (const auto& e : r.breakdown.excursions) {
      json je = {{"entry", e.entry}, {"duration", e.duration}, {"cost", e.cost}};
      je["exit"] = e.exit == kNoVertex ? json(nullptr) : json(e.exit);
      ex.push_back(je);
    }
    out["breakdown"] = {{"total_cost", r.breakdown.total_cost}, {"total_time", r.breakdown.total_time},
                        {"safe_time", r.breakdown.safe_time},   {"risk_time", r.breakdown.risk_time()},
                        {"excursions", ex}};
  } else {
    out["breakdown"] = nullptr;
  }
  const SearchStats& st = r.stats;
  out["stats"] = {{"expansions", st.expansions},
                  {"pushes", st.pushes},
                  {"queue_peak", st.queue_peak},
                  {"live_channels_peak", st.live_channels_peak},
                  {"wall_seconds", st.wall_seconds}};
  if (r.algorithm == Algorithm::Precompute) {
    out["stats"]["apsp_seconds"] = st.apsp_seconds;
    out["stats"]["table_bytes"] = st.table_bytes;
    out["stats"]["border_edges"] = st.border_edges;
  }
  json meta;
  meta["scenario"] = s.name;
  meta["seed"] = s.options.seed;
  meta["alpha"] = s.options.alpha;
  meta["vertices"] = b.refined.vertex_count();
  meta["border_points"] = b.refined.border_count();
  meta["queue_order"] = "priority, exposure, vertex id, last border id (none first)";
  meta["min_risk_order"] = "risk time, length, vertex id";
  if (s.roadmap.kind == RoadmapKind::Halton) meta["connection_rule"] = "radius";
  out["metadata"] = meta;
  return out;
}

std::string result_to_json(const PathResult& r, const BuiltScenario& b, const Scenario& s) {
  return result_document(r, b, s).dump(2) + "\n";
}

}  // namespace ramp
