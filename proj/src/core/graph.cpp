#include "polyk/core/graph.hpp"

#include <algorithm>

namespace polyk {

Graph::Graph(int n, std::vector<Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count " + std::to_string(n));
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge " + to_string({u, v}) + " has an endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    if (u == v) throw GraphError("edge " + to_string({u, v}) + " is a loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adjacency_.assign(n, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

int Graph::min_degree() const {
  int d = order() == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < order(); ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  auto edges = edges_;
  edges.emplace_back(u, v);
  return Graph(order(), std::move(edges));
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  auto edges = edges_;
  const Edge target = u < v ? Edge{u, v} : Edge{v, u};
  std::erase(edges, target);
  return Graph(order(), std::move(edges));
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order())
    throw GraphError("relabeling has wrong length");
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& [u, v] : edges_) edges.emplace_back(perm[u], perm[v]);
  return Graph(order(), std::move(edges));
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  std::uint64_t mask = 0;
  for (Vertex w : adjacency_[v]) mask |= std::uint64_t{1} << w;
  return mask;
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace polyk
