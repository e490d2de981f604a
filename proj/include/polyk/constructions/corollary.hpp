#pragma once

#include <optional>
#include <string>

#include "polyk/core/colored_graph.hpp"

namespace polyk {

struct CorollaryReport {
  bool passed = false;
  /// "H" when removing blue-blue edges already leaves a quadrangulation,
  /// "H'" when one red-blue chord was added across an alternating hexagon.
  std::string branch;
  int removed_blue_edges = 0;
  std::optional<Edge> chord;
  std::optional<FaceWalk> offending_face;
  std::string message;
};

/// Removes every blue-blue edge of an embedded extremal graph with odd
/// a >= 3, splits a remaining alternating hexagon by one red-blue chord, and
/// checks the result is a 2-connected quadrangulation.
/// Throws GraphError when c has no embedding or an even/too small red set.
CorollaryReport check_odd_corollary(const ColoredGraph& c);

}  // namespace polyk
