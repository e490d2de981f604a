#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyk {

using Vertex = int;

/// Unordered vertex pair, normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Edges are stored normalized and sorted; adjacency lists are sorted too, so
/// iteration order is a pure function of the edge set.
class Graph {
 public:
  Graph() = default;

  /// Builds the graph, collapsing duplicate pairs. Throws GraphError on a loop
  /// or an endpoint outside 0..n-1.
  Graph(int n, std::vector<Edge> edges);

  static Graph complete(int n);
  static Graph cycle(int n);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int min_degree() const;
  int max_degree() const;

  bool has_edge(Vertex u, Vertex v) const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const Vertex> perm) const;

  /// Neighbor bitmask of v; only valid when order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

std::string to_string(const Edge& e);

}  // namespace polyk
