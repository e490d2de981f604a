#include "polyk/analysis/structure.hpp"

#include <algorithm>

#include "polyk/analysis/connectivity.hpp"
#include "polyk/analysis/planarity.hpp"

namespace polyk {

std::optional<std::array<Vertex, 4>> find_separating_quadrilateral(const Graph& g) {
  const int n = g.order();
  if (n < 6) return std::nullopt;
  std::vector<char> removed(n, 0);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) {
      std::vector<Vertex> common;
      std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(c).begin(),
                            g.neighbors(c).end(), std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          const std::array<Vertex, 4> cycle{a, common[i], c, common[j]};
          for (Vertex v : cycle) removed[v] = 1;
          const int parts = count_components_without(g, removed);
          for (Vertex v : cycle) removed[v] = 0;
          if (parts >= 2) return cycle;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_quadrangulation(const Embedding& e) {
  const auto faces = e.faces();
  const bool all_quads =
      std::all_of(faces.begin(), faces.end(), [](const FaceWalk& f) { return f.size() == 4; });
  if (!all_quads) return false;
  const int p = e.graph().order(), q = e.graph().size();
  if (q != 2 * p - 4)
    throw GraphError("all faces are quadrilaterals but q != 2p - 4; embedding is not spherical");
  return true;
}

bool is_maximal_planar(const Graph& g) {
  const int n = g.order();
  return n >= 3 && g.size() == 3 * n - 6 && is_planar(g).planar;
}

}  // namespace polyk
