#pragma once

#include "polyk/core/colored_graph.hpp"

namespace polyk {

/// Vertex-face (radial) graph of a polyhedral embedding. Vertices 0..p-1 are
/// the input vertices, p..p+r-1 the input faces in trace order; each face is
/// joined to the vertices on its boundary. The result is embedded, bipartite,
/// all faces are quadrilaterals, and the face vertices are red.
/// Throws GraphError when the input is not polyhedral.
ColoredGraph radial_graph(const Embedding& e);

}  // namespace polyk
