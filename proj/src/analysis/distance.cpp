#include "polyk/analysis/distance.hpp"

#include <algorithm>
#include <queue>

#include "polyk/analysis/connectivity.hpp"

namespace polyk {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

int DistanceMatrix::diameter() const {
  return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist;
  dist.reserve(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    if (s == 0 && std::find(row.begin(), row.end(), -1) != row.end()) {
      auto comps = components(g);
      throw DisconnectedError("graph is disconnected (" + std::to_string(comps.size()) +
                                  " components)",
                              comps[1]);
    }
    dist.insert(dist.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(dist));
}

ShellDecomposition distance_shells(const Graph& g, Vertex source, int limit) {
  ShellDecomposition out;
  out.source = source;
  out.shells.assign(std::max(limit, 0), {});
  const auto dist = bfs_distances(g, source);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == source) continue;
    if (dist[v] >= 1 && dist[v] <= limit)
      out.shells[dist[v] - 1].push_back(v);
    else
      out.remainder.push_back(v);
  }
  return out;
}

Graph graph_power(const Graph& g, int k) {
  if (k < 1) throw GraphError("graph power needs k >= 1, got " + std::to_string(k));
  if (k == 1) return g;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (dist[v] >= 1 && dist[v] <= k) edges.emplace_back(u, v);
  }
  return Graph(g.order(), std::move(edges));
}

int diameter(const Graph& g) { return all_pairs_distances(g).diameter(); }

}  // namespace polyk
