#pragma once

#include <optional>
#include <string>

#include "polyk/core/colored_graph.hpp"

namespace polyk {

/// Two quadrilateral faces sharing exactly the red-blue edge b2-r2:
///   first  = walk b1 -> r1 -> b2 -> r2
///   second = walk b2 -> r3 -> b3 -> r2
/// Colors alternate on both faces and the six vertices are distinct.
struct PSite {
  Vertex b1, r1, b2, r2, b3, r3;

  std::string describe() const;
  friend bool operator==(const PSite&, const PSite&) = default;
};

/// First site in face-trace order, or nullopt.
std::optional<PSite> find_p_site(const ColoredGraph& c);

/// Empty string when the site is valid in c, else a diagnosis.
std::string diagnose_p_site(const ColoredGraph& c, const PSite& site);

/// Replaces the two site faces by five alternating quadrilaterals: deletes
/// b2-r2, adds reds ra, rb and blue bn with ra~{b1,b2,bn}, rb~{b2,b3,bn},
/// bn~r2. Net +3 vertices, +6 edges, +3 faces, +2 reds; existing red degrees
/// are unchanged. Throws GraphError on an invalid site.
ColoredGraph transform_p(const ColoredGraph& c, const PSite& site);

/// Surrounds the degree-3 vertex v (rotation x, y, z) by a new blue triangle
/// a, b, c with spokes to v and outer edges a-x, b-y, c-z. Every distance from
/// v to an old vertex grows by exactly one; no other distance shrinks.
/// Throws GraphError when deg(v) != 3.
ColoredGraph transform_q(const ColoredGraph& c, Vertex v);

}  // namespace polyk
