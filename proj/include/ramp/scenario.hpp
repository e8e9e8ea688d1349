#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ramp/coastal.hpp"
#include "ramp/cost.hpp"
#include "ramp/path_result.hpp"
#include "ramp/roadmap.hpp"
#include "ramp/world.hpp"

namespace ramp {

enum class WorldKind { Graph, Grid, Polygons, Coastal };
enum class RoadmapKind { Grid, Halton, Explicit };

const char* to_string(WorldKind k);
const char* to_string(RoadmapKind k);

struct WorldSpec {
  WorldKind kind = WorldKind::Graph;
  // grid: inline rows or a file in the ASCII grid format
  std::vector<std::string> rows;
  std::string grid_file;
  double cell_size = 1.0;
  Point2 origin{};
  // polygons
  std::optional<Box> bounds;
  std::vector<Polygon> obstacles;
  std::vector<Polygon> risk;
  std::optional<double> risk_offset;  // rasterize with risk_offset_world
  double resolution = 1.0;
  // coastal
  CoastalParams coastal;
};

struct ExplicitVertex {
  Point2 p;
  ZoneLabel zone = ZoneLabel::Safe;
};

struct ExplicitEdge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  std::optional<double> length;
  std::optional<ZoneLabel> zone;
};

struct RoadmapSpec {
  RoadmapKind kind = RoadmapKind::Explicit;
  Connectivity connectivity = Connectivity::Eight;
  std::size_t halton_n = 0;
  double halton_radius = 0.0;
  HaltonOffsets halton_offsets;
  std::vector<ExplicitVertex> vertices;
  std::vector<ExplicitEdge> edges;
};

/// Either a roadmap vertex id or a point snapped to the nearest vertex.
using Endpoint = std::variant<VertexId, Point2>;

struct PlannerOptions {
  double alpha = 1.0;
  bool pruning = true;
  bool trace = false;
  std::uint64_t seed = 0;
  std::size_t memory_budget = std::size_t{2} << 30;
};

struct Scenario {
  std::string name;
  WorldSpec world;
  RoadmapSpec roadmap;
  Endpoint start = VertexId{0};
  Endpoint goal = VertexId{0};
  PlannerOptions options;
  std::filesystem::path base_dir;  // resolves grid_file; not serialized
};

/// Throws ParseError with the line and column of the offending text.
Scenario parse_scenario(std::string_view text, const std::string& source = "<scenario>");
Scenario load_scenario(const std::filesystem::path& file);
std::string serialize_scenario(const Scenario& s);

struct BuiltScenario {
  std::optional<World> world;  // empty for explicit graphs without geometry
  Roadmap roadmap;
  RefinedRoadmap refined;
  VertexId start = kNoVertex;
  VertexId goal = kNoVertex;
  CostModel cost;
};

/// Builds world, roadmap and refinement. Throws InvalidQuery when start or
/// goal does not resolve to a roadmap vertex.
BuiltScenario build_scenario(const Scenario& s);

/// The five-vertex example (x_s, x1, x2, y, z) as a scenario, goal z.
Scenario fig1_scenario();

/// 201x201 coastal benchmark scenario.
Scenario coastal_scenario(const CoastalParams& params = {});

/// JSON document describing a planner result: path with coordinates and
/// labels, cost breakdown, statistics and run metadata.
nlohmann::json result_document(const PathResult& r, const BuiltScenario& b, const Scenario& s);
std::string result_to_json(const PathResult& r, const BuiltScenario& b, const Scenario& s);

}  // namespace ramp
