#pragma once

#include <stdexcept>
#include <vector>

#include "polyk/core/graph.hpp"

namespace polyk {

class DisconnectedError : public GraphError {
 public:
  DisconnectedError(const std::string& what, std::vector<Vertex> component)
      : GraphError(what), component_(std::move(component)) {}
  /// A component not containing vertex 0.
  const std::vector<Vertex>& component() const { return component_; }

 private:
  std::vector<Vertex> component_;
};

/// Unweighted distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> dist) : n_(n), dist_(std::move(dist)) {}
  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  int diameter() const;

 private:
  int n_;
  std::vector<int> dist_;
};

/// Throws DisconnectedError with a component witness.
DistanceMatrix all_pairs_distances(const Graph& g);

struct ShellDecomposition {
  Vertex source = 0;
  /// shells[i] holds the vertices at distance i + 1, sorted.
  std::vector<std::vector<Vertex>> shells;
  /// Vertices farther than the limit (or unreachable), sorted.
  std::vector<Vertex> remainder;
};

ShellDecomposition distance_shells(const Graph& g, Vertex source, int limit);

/// Edge uv present iff 1 <= d(u,v) <= k. Throws GraphError for k < 1.
Graph graph_power(const Graph& g, int k);

int diameter(const Graph& g);

}  // namespace polyk
