#include "ramp/path_result.hpp"

#include "ramp/errors.hpp"

namespace ramp {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Incremental: return "incremental";
    case Algorithm::AStar: return "astar";
    case Algorithm::Precompute: return "precompute";
    case Algorithm::Dijkstra: return "dijkstra";
    case Algorithm::MinRisk: return "minrisk";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Incremental, Algorithm::AStar, Algorithm::Precompute, Algorithm::Dijkstra,
                      Algorithm::MinRisk}) {
    if (name == to_string(a)) return a;
  }
  throw InvalidParameter("unknown algorithm '" + std::string(name) + "'");
}

}  // namespace ramp
