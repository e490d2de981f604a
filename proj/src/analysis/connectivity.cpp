#include "polyk/analysis/connectivity.hpp"

#include <algorithm>

namespace polyk {

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

int count_components_without(const Graph& g, const std::vector<char>& removed) {
  std::vector<char> seen(removed);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

std::vector<Vertex> articulation_points(const Graph& g, const std::vector<char>& removed) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;

  // Iterative Tarjan lowpoint computation.
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    int children;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (removed[root] || disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        if (removed[w] || w == f.parent) continue;
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, f.v, 0, 0});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut[done.v] = 1;
        continue;
      }
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (parent.parent != -1 && low[done.v] >= disc[parent.v]) is_cut[parent.v] = 1;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

ConnectivityResult is_k_connected(const Graph& g, int t) {
  if (t < 1 || t > 3) throw GraphError("connectivity order must be 1, 2 or 3, got " + std::to_string(t));
  const int n = g.order();
  if (n <= t)
    throw GraphError(std::to_string(t) + "-connectivity needs more than " + std::to_string(t) +
                     " vertices, got " + std::to_string(n));

  std::vector<char> removed(n, 0);
  if (count_components_without(g, removed) > 1) return {false, std::vector<Vertex>{}};
  if (t == 1) return {true, std::nullopt};

  if (auto cuts = articulation_points(g, removed); !cuts.empty())
    return {false, std::vector<Vertex>{cuts.front()}};
  if (t == 2) return {true, std::nullopt};

  // A 2-cut {x, y} exists iff y is an articulation point of g - x.
  for (Vertex x = 0; x < n; ++x) {
    removed[x] = 1;
    const auto cuts = articulation_points(g, removed);
    removed[x] = 0;
    if (!cuts.empty()) {
      std::vector<Vertex> cut{x, cuts.front()};
      std::sort(cut.begin(), cut.end());
      return {false, cut};
    }
  }
  return {true, std::nullopt};
}

}  // namespace polyk
