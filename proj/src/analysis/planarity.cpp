#include "polyk/analysis/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace polyk {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

PlanarityResult is_planar(const Graph& g) {
  const int n = g.order();
  if (n >= 3 && g.size() > 3 * n - 6) return {};

  BoostGraph bg(n);
  for (const auto& [u, v] : g.edges()) boost::add_edge(u, v, bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int next = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, next++);

  std::vector<std::vector<BoostEdge>> storage(n);
  auto embedding = boost::make_iterator_property_map(storage.begin(),
                                                     boost::get(boost::vertex_index, bg));
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding);
  if (!planar) return {};

  std::vector<std::vector<Vertex>> rotation(n);
  for (int v = 0; v < n; ++v) {
    for (const auto& e : storage[v]) {
      const auto s = static_cast<Vertex>(boost::source(e, bg));
      const auto t = static_cast<Vertex>(boost::target(e, bg));
      rotation[v].push_back(s == v ? t : s);
    }
  }
  return {true, Embedding(g, std::move(rotation))};
}

Embedding planar_embedding(const Graph& g) {
  auto result = is_planar(g);
  if (!result.planar) throw GraphError("graph is not planar");
  return std::move(*result.embedding);
}

}  // namespace polyk
