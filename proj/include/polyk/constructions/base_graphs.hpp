#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyk/core/colored_graph.hpp"

namespace polyk {

/// Starting graphs with a red independent set of size 1..5 on 4, 5, 7, 8, 10
/// vertices. All are embedded; red vertices are pairwise non-adjacent.
enum class BaseGraph { Tetrahedron, SquarePyramid, G3, Cube, Pdw10 };

/// Throws GraphError on an unknown name.
BaseGraph parse_base_graph(std::string_view name);
std::string_view base_graph_name(BaseGraph which);

ColoredGraph base_graph(BaseGraph which);
inline ColoredGraph base_graph(std::string_view name) { return base_graph(parse_base_graph(name)); }

/// a copies of K4 on {A_i, B_i, C_i, D_i} (vertex 4i + 0..3) joined by
/// B_i B_{i+1} and C_i D_{i+1} cyclically. Red = {A_i}; 2-independent.
ColoredGraph k4_necklace(int a);

/// Plain graphs used throughout tests and the characterization checks.
Graph tetrahedron_graph();
Graph cube_graph();
Graph octahedron_graph();
Graph triangular_bipyramid_graph();
Graph square_pyramid_graph();

}  // namespace polyk
