#pragma once

#include <optional>
#include <vector>

#include "polyk/core/graph.hpp"

namespace polyk {

struct ConnectivityResult {
  bool connected = false;
  /// On failure, a smallest vertex set whose removal disconnects the graph
  /// (empty when the graph is already disconnected).
  std::optional<std::vector<Vertex>> cut;
};

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Components of g with the vertices flagged in `removed` deleted.
int count_components_without(const Graph& g, const std::vector<char>& removed);

/// Articulation points of g restricted to vertices not flagged in `removed`.
std::vector<Vertex> articulation_points(const Graph& g, const std::vector<char>& removed);

/// t-vertex-connectivity for t in {1,2,3}. Throws GraphError when t is out of
/// range or n <= t.
ConnectivityResult is_k_connected(const Graph& g, int t);

}  // namespace polyk
