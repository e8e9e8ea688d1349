#pragma once

#include <cstdint>
#include <vector>

#include "ramp/geometry.hpp"
#include "ramp/world.hpp"

namespace ramp {

/// Synthetic coastline: a mainland with a deep bay and a few random islands
/// inside it. The safe zone is the band within `offset` of any land.
struct CoastalParams {
  std::uint64_t seed = 1;
  int cells = 201;
  double cell_size = 0.1;
  double offset = 1.0;
  int islands = 6;
};

struct CoastalLayout {
  Box bounds;
  std::vector<Polygon> land;  // mainland first, then islands
  Point2 start;
  Point2 goal;
};

CoastalLayout coastal_layout(const CoastalParams& params);

/// Grid world of params.cells x params.cells cells.
World coastal_world(const CoastalParams& params);

}  // namespace ramp
