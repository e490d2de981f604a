#include "polyk/core/embedding.hpp"

#include <algorithm>

namespace polyk {

Vertex RotationSystem::add_vertex(std::vector<Vertex> rotation) {
  rotation_.push_back(std::move(rotation));
  return order() - 1;
}

void RotationSystem::remove_edge(Vertex u, Vertex v) {
  std::erase(rotation_[u], v);
  std::erase(rotation_[v], u);
}

void RotationSystem::insert_after(Vertex v, Vertex anchor, Vertex w) {
  auto& rot = rotation_[v];
  auto it = std::find(rot.begin(), rot.end(), anchor);
  if (it == rot.end())
    throw GraphError("vertex " + std::to_string(anchor) + " is not in the rotation at " +
                     std::to_string(v));
  rot.insert(it + 1, w);
}

void RotationSystem::replace(Vertex v, Vertex old_nbr, Vertex new_nbr) {
  auto& rot = rotation_[v];
  auto it = std::find(rot.begin(), rot.end(), old_nbr);
  if (it == rot.end())
    throw GraphError("vertex " + std::to_string(old_nbr) + " is not in the rotation at " +
                     std::to_string(v));
  *it = new_nbr;
}

Embedding::Embedding(Graph graph, std::vector<std::vector<Vertex>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  if (static_cast<int>(rotation_.size()) != graph_.order())
    throw GraphError("rotation system has " + std::to_string(rotation_.size()) +
                     " entries for " + std::to_string(graph_.order()) + " vertices");
  for (Vertex v = 0; v < graph_.order(); ++v) {
    std::vector<Vertex> sorted = rotation_[v];
    std::sort(sorted.begin(), sorted.end());
    const auto nbrs = graph_.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end()))
      throw GraphError("rotation at vertex " + std::to_string(v) +
                       " is not a permutation of its neighbors");
  }
}

Embedding Embedding::from_rotation(const RotationSystem& rotation) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < rotation.order(); ++v)
    for (Vertex w : rotation.at(v)) edges.emplace_back(v, w);
  Graph g(rotation.order(), std::move(edges));
  // Asymmetric lists are caught by the permutation check.
  return Embedding(std::move(g), rotation.lists());
}

Vertex Embedding::successor(Vertex v, Vertex u) const {
  const auto& rot = rotation_[v];
  auto it = std::find(rot.begin(), rot.end(), u);
  if (it == rot.end())
    throw GraphError(std::to_string(u) + " is not a neighbor of " + std::to_string(v));
  ++it;
  return it == rot.end() ? rot.front() : *it;
}

Vertex Embedding::predecessor(Vertex v, Vertex u) const {
  const auto& rot = rotation_[v];
  auto it = std::find(rot.begin(), rot.end(), u);
  if (it == rot.end())
    throw GraphError(std::to_string(u) + " is not a neighbor of " + std::to_string(v));
  return it == rot.begin() ? rot.back() : *(it - 1);
}

FaceWalk Embedding::face_of_dart(Vertex u, Vertex v) const {
  FaceWalk walk;
  Vertex a = u, b = v;
  do {
    walk.push_back(a);
    const Vertex c = successor(b, a);
    a = b;
    b = c;
  } while (a != u || b != v);
  return walk;
}

std::vector<FaceWalk> Embedding::faces() const {
  if (!is_connected(graph_)) throw GraphError("face tracing needs a connected graph");
  std::vector<FaceWalk> result;
  if (graph_.order() == 1) {
    result.push_back({0});
    return result;
  }
  // Dart index: position of w in rotation_[v].
  std::vector<std::vector<char>> seen(graph_.order());
  for (Vertex v = 0; v < graph_.order(); ++v) seen[v].assign(rotation_[v].size(), 0);
  auto index_of = [&](Vertex v, Vertex w) {
    const auto& rot = rotation_[v];
    return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), w) - rot.begin());
  };
  for (Vertex u = 0; u < graph_.order(); ++u) {
    for (std::size_t i = 0; i < rotation_[u].size(); ++i) {
      if (seen[u][i]) continue;
      FaceWalk walk;
      Vertex a = u, b = rotation_[u][i];
      std::size_t ai = i;
      while (!seen[a][ai]) {
        seen[a][ai] = 1;
        walk.push_back(a);
        const std::size_t bi = index_of(b, a);
        const std::size_t next = (bi + 1) % rotation_[b].size();
        a = b;
        ai = next;
        b = rotation_[a][next];
      }
      result.push_back(std::move(walk));
    }
  }
  return result;
}

int Embedding::euler_characteristic() const {
  return graph_.order() - graph_.size() + static_cast<int>(faces().size());
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

}  // namespace polyk
