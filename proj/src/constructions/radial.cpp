#include "polyk/constructions/radial.hpp"

#include <algorithm>

#include "polyk/analysis/verify.hpp"

namespace polyk {

ColoredGraph radial_graph(const Embedding& e) {
  const Graph& g = e.graph();
  if (!is_polyhedral(g).polyhedral) throw GraphError("radial graph needs a polyhedral input");
  const int p = g.order();
  const auto faces = e.faces();

  // face_at[v][i] = face containing the dart rotation(v)[i] -> v.
  std::vector<std::vector<int>> face_at(p);
  for (Vertex v = 0; v < p; ++v) face_at[v].assign(e.rotation(v).size(), -1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& walk = faces[f];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Vertex from = walk[i], to = walk[(i + 1) % walk.size()];
      const auto& rot = e.rotation(to);
      const auto pos = std::find(rot.begin(), rot.end(), from) - rot.begin();
      face_at[to][pos] = static_cast<int>(f);
    }
  }

  std::vector<std::vector<Vertex>> rotation(p + faces.size());
  std::vector<Edge> edges;
  std::vector<Vertex> red;
  for (Vertex v = 0; v < p; ++v)
    for (int f : face_at[v]) rotation[v].push_back(p + f);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const Vertex fv = p + static_cast<Vertex>(f);
    red.push_back(fv);
    rotation[fv].assign(faces[f].rbegin(), faces[f].rend());
    for (Vertex v : faces[f]) edges.emplace_back(v, fv);
  }
  Graph radial(p + static_cast<int>(faces.size()), std::move(edges));
  return ColoredGraph(Embedding(std::move(radial), std::move(rotation)), std::move(red), 1)
      .with_step("radial");
}

}  // namespace polyk
