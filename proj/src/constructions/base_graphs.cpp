#include "polyk/constructions/base_graphs.hpp"

#include "polyk/analysis/planarity.hpp"

namespace polyk {

namespace {

ColoredGraph embedded(const Graph& g, std::vector<Vertex> red, std::string name) {
  return ColoredGraph(planar_embedding(g), std::move(red), 1).with_step(std::move(name));
}

}  // namespace

BaseGraph parse_base_graph(std::string_view name) {
  if (name == "tetrahedron") return BaseGraph::Tetrahedron;
  if (name == "square_pyramid") return BaseGraph::SquarePyramid;
  if (name == "g3") return BaseGraph::G3;
  if (name == "cube") return BaseGraph::Cube;
  if (name == "pdw10") return BaseGraph::Pdw10;
  throw GraphError("unknown base graph '" + std::string(name) + "'");
}

std::string_view base_graph_name(BaseGraph which) {
  switch (which) {
    case BaseGraph::Tetrahedron: return "tetrahedron";
    case BaseGraph::SquarePyramid: return "square_pyramid";
    case BaseGraph::G3: return "g3";
    case BaseGraph::Cube: return "cube";
    case BaseGraph::Pdw10: return "pdw10";
  }
  return "unknown";
}

Graph tetrahedron_graph() { return Graph::complete(4); }

// Vertices are 3-bit words; edges join words at Hamming distance 1.
Graph cube_graph() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (!(v >> b & 1)) edges.emplace_back(v, v | 1 << b);
  return Graph(8, std::move(edges));
}

// K6 minus the perfect matching {0,1}, {2,3}, {4,5}.
Graph octahedron_graph() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) edges.emplace_back(u, v);
  return Graph(6, std::move(edges));
}

// Triangle 0,1,2 with apexes 3 and 4.
Graph triangular_bipyramid_graph() {
  return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
}

// Base cycle 0-1-2-3, apex 4.
Graph square_pyramid_graph() {
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

ColoredGraph base_graph(BaseGraph which) {
  switch (which) {
    case BaseGraph::Tetrahedron:
      return embedded(tetrahedron_graph(), {0}, "tetrahedron");
    case BaseGraph::SquarePyramid:
      // Opposite base corners, both of degree 3.
      return embedded(square_pyramid_graph(), {0, 2}, "square_pyramid");
    case BaseGraph::G3: {
      // Cube with the edge 000-001 contracted into blue vertex 0. Remaining
      // cube words 2..7 keep their labels shifted down by one.
      const Graph cube = cube_graph();
      auto relabel = [](Vertex v) { return v <= 1 ? 0 : v - 1; };
      std::vector<Edge> edges;
      for (const auto& [u, v] : cube.edges())
        if (relabel(u) != relabel(v)) edges.emplace_back(relabel(u), relabel(v));
      // Reds are the even-weight words 011, 101, 110.
      return embedded(Graph(7, std::move(edges)), {relabel(3), relabel(5), relabel(6)}, "g3");
    }
    case BaseGraph::Cube:
      return embedded(cube_graph(), {0, 3, 5, 6}, "cube");
    case BaseGraph::Pdw10: {
      // Cycle c1..c8 is 0..7 (c_i = i-1), hub u = 8 on odd c_i, hub w = 9 on even c_i.
      std::vector<Edge> edges;
      for (Vertex i = 0; i < 8; ++i) {
        edges.emplace_back(i, (i + 1) % 8);
        edges.emplace_back(i, i % 2 == 0 ? 8 : 9);
      }
      return embedded(Graph(10, std::move(edges)), {8, 1, 3, 5, 7}, "pdw10");
    }
  }
  throw GraphError("unknown base graph");
}

ColoredGraph k4_necklace(int a) {
  if (a < 1) throw GraphError("k4 necklace needs a >= 1, got " + std::to_string(a));
  auto A = [](int i) { return 4 * i; };
  auto B = [](int i) { return 4 * i + 1; };
  auto C = [](int i) { return 4 * i + 2; };
  auto D = [](int i) { return 4 * i + 3; };
  std::vector<Edge> edges;
  std::vector<Vertex> red;
  for (int i = 0; i < a; ++i) {
    const int quad[4] = {A(i), B(i), C(i), D(i)};
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y) edges.emplace_back(quad[x], quad[y]);
    red.push_back(A(i));
    if (a > 1) {
      const int j = (i + 1) % a;
      edges.emplace_back(B(i), B(j));
      edges.emplace_back(C(i), D(j));
    }
  }
  return embedded(Graph(4 * a, std::move(edges)), std::move(red),
                  "k4_necklace(" + std::to_string(a) + ")");
}

}  // namespace polyk
