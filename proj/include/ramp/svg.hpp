#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ramp/path_result.hpp"
#include "ramp/roadmap.hpp"
#include "ramp/world.hpp"

namespace ramp {

/// Stroke pattern per planner: solid for the risk-aware planners, dashed for
/// shortest paths, dotted for minimum-risk paths.
const char* stroke_dasharray(Algorithm a);

/// Deterministic SVG of the world (or the bare roadmap when `world` is null)
/// and every found path. Safe path segments are green, risk segments blue.
std::string render_svg(const World* world, const RefinedRoadmap& g, const std::vector<PathResult>& results);

/// Throws Error naming the file on IO failure.
void write_text_file(const std::filesystem::path& file, const std::string& content);

}  // namespace ramp
