#pragma once

#include <array>
#include <optional>

#include "polyk/core/embedding.hpp"

namespace polyk {

/// A 4-cycle whose removal leaves at least two non-empty components, if any.
/// Cycles are found by pairing common neighbors of opposite corners.
std::optional<std::array<Vertex, 4>> find_separating_quadrilateral(const Graph& g);
inline bool has_separating_quadrilateral(const Embedding& e) {
  return find_separating_quadrilateral(e.graph()).has_value();
}

/// Every traced face has length 4 (which forces q = 2p - 4).
bool is_quadrangulation(const Embedding& e);

/// Planar, n >= 3 and q = 3p - 6.
bool is_maximal_planar(const Graph& g);

}  // namespace polyk
