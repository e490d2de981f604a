#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "polyk/constructions/base_graphs.hpp"
#include "polyk/constructions/builder.hpp"
#include "polyk/constructions/transforms.hpp"
#include "polyk/core/canon.hpp"
#include "polyk/core/graph6.hpp"
#include "polyk/core/json_io.hpp"
#include "support/oracles.hpp"

using namespace polyk;

namespace {

void check_face_partition(const Embedding& e) {
  const auto faces = e.faces();
  std::set<std::pair<Vertex, Vertex>> darts;
  std::size_t total = 0;
  for (const auto& f : faces) {
    total += f.size();
    for (std::size_t i = 0; i < f.size(); ++i)
      CHECK(darts.insert({f[i], f[(i + 1) % f.size()]}).second);
  }
  CHECK(total == 2 * static_cast<std::size_t>(e.graph().size()));
  CHECK(darts.size() == 2 * static_cast<std::size_t>(e.graph().size()));
}

Graph random_graph(int n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("graph construction") {
  SUBCASE("complete graph") {
    const Graph k4 = Graph::complete(4);
    CHECK(k4.order() == 4);
    CHECK(k4.size() == 6);
  }
  SUBCASE("unordered pairs are deduplicated") {
    const Graph g(2, {{0, 1}, {1, 0}});
    CHECK(g.order() == 2);
    CHECK(g.size() == 1);
  }
  SUBCASE("cube") {
    const Graph cube = cube_graph();
    CHECK(cube.order() == 8);
    CHECK(cube.size() == 12);
    for (Vertex v = 0; v < 8; ++v) CHECK(cube.degree(v) == 3);
  }
  SUBCASE("errors name the offending pair") {
    CHECK_THROWS_WITH_AS(Graph(3, {{0, 1}, {2, 2}}), doctest::Contains("(2,2)"), GraphError);
    CHECK_THROWS_WITH_AS(Graph(3, {{0, 3}}), doctest::Contains("(0,3)"), GraphError);
    CHECK_THROWS_AS(Graph(3, {{-1, 0}}), GraphError);
  }
  SUBCASE("adjacency is symmetric and sorted") {
    const Graph g(5, {{4, 0}, {2, 0}, {3, 1}, {0, 1}});
    for (Vertex v = 0; v < 5; ++v) {
      auto nbrs = g.neighbors(v);
      CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
      for (Vertex w : nbrs) CHECK(g.has_edge(w, v));
    }
    CHECK(g.edges().front() == Edge{0, 1});
  }
}

TEST_CASE("face tracing") {
  SUBCASE("tetrahedron has four triangles") {
    const auto e = base_graph(BaseGraph::Tetrahedron).embedding();
    const auto faces = e.faces();
    CHECK(faces.size() == 4);
    for (const auto& f : faces) CHECK(f.size() == 3);
    CHECK(e.euler_characteristic() == 2);
    check_face_partition(e);
  }
  SUBCASE("cube has six quadrilaterals") {
    const auto e = base_graph(BaseGraph::Cube).embedding();
    const auto faces = e.faces();
    CHECK(faces.size() == 6);
    for (const auto& f : faces) CHECK(f.size() == 4);
    check_face_partition(e);
  }
  SUBCASE("PDW10 has eight quadrilaterals") {
    const auto e = base_graph(BaseGraph::Pdw10).embedding();
    const auto faces = e.faces();
    CHECK(e.graph().size() == 16);
    CHECK(faces.size() == 8);
    for (const auto& f : faces) CHECK(f.size() == 4);
    CHECK(e.euler_characteristic() == 2);
    check_face_partition(e);
  }
  SUBCASE("disconnected graphs are rejected") {
    const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const Embedding e(two_triangles, {{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}});
    CHECK_THROWS_AS(e.faces(), GraphError);
  }
  SUBCASE("rotation must permute the neighbors") {
    CHECK_THROWS_AS(Embedding(Graph::complete(3), {{1, 2}, {0, 2}, {0, 0}}), GraphError);
    CHECK_THROWS_AS(Embedding(Graph::complete(3), {{1, 2}, {0, 2}}), GraphError);
  }
  SUBCASE("flipping one rotation of K4 leaves the sphere") {
    auto rot = base_graph(BaseGraph::Tetrahedron).embedding().rotations();
    std::swap(rot[0][0], rot[0][1]);
    const Embedding twisted(Graph::complete(4), rot);
    check_face_partition(twisted);
    CHECK(twisted.euler_characteristic() != 2);
  }
}

TEST_CASE("every constructed embedding satisfies Euler's formula") {
  for (int k = 1; k <= 3; ++k)
    for (int a = 1; a <= 7; ++a) {
      const auto inst = build_extremal(k, a);
      const auto& e = inst.result.embedding();
      CHECK(e.euler_characteristic() == 2);
      check_face_partition(e);
    }
}

TEST_CASE("canonical form") {
  SUBCASE("K4 under all 24 relabelings") {
    const Graph k4 = Graph::complete(4);
    std::vector<Vertex> perm{0, 1, 2, 3};
    const auto code = canonical_form(k4);
    do {
      CHECK(canonical_form(k4.relabeled(perm)) == code);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  SUBCASE("cube against a relabeled cube") {
    std::mt19937 rng(7);
    const Graph cube = cube_graph();
    CHECK(canonical_form(cube) == canonical_form(cube.relabeled(testing::random_permutation(8, rng))));
  }
  SUBCASE("cube and PDW10 differ") {
    CHECK(canonical_form(cube_graph()) != canonical_form(base_graph(BaseGraph::Pdw10).graph()));
  }
  SUBCASE("code is the graph6 string of the canonical relabeling") {
    const Graph g = base_graph(BaseGraph::G3).graph();
    const auto code = canonical_form(g);
    CHECK(code.n == 7);
    CHECK(to_graph6(canonical_graph(g)) == code.bytes);
    CHECK(code.hex().size() == 2 * code.bytes.size());
    CHECK(canonical_form(Graph::complete(4)).hex() == "437e");  // "C~"
  }
  SUBCASE("empty and single vertex graphs") {
    CHECK(canonical_form(Graph(0, {})).n == 0);
    CHECK(canonical_form(Graph(1, {})) == canonical_form(Graph(1, {})));
  }
}

TEST_CASE("canonical form is invariant under 100 random relabelings of constructed graphs") {
  std::mt19937 rng(20240601);
  std::vector<Graph> corpus;
  for (auto which : {BaseGraph::Tetrahedron, BaseGraph::SquarePyramid, BaseGraph::G3,
                     BaseGraph::Cube, BaseGraph::Pdw10})
    corpus.push_back(base_graph(which).graph());
  corpus.push_back(k4_necklace(2).graph());
  corpus.push_back(k4_necklace(3).graph());
  corpus.push_back(octahedron_graph());
  for (int a = 5; a <= 8; ++a) corpus.push_back(build_extremal(1, a).result.graph());
  corpus.push_back(build_extremal(2, 3).result.graph());
  corpus.push_back(build_extremal(3, 2).result.graph());
  corpus.push_back(transform_q(base_graph(BaseGraph::Cube), 0).graph());
  for (const auto& g : corpus) {
    REQUIRE(g.order() <= 14);
    const auto code = canonical_form(g);
    for (int i = 0; i < 100; ++i) {
      const auto perm = testing::random_permutation(g.order(), rng);
      CHECK(canonical_form(g.relabeled(perm)) == code);
    }
  }
}

TEST_CASE("are_isomorphic") {
  std::mt19937 rng(3);
  SUBCASE("K4 relabeled") {
    CHECK(are_isomorphic(Graph::complete(4),
                         Graph::complete(4).relabeled(testing::random_permutation(4, rng))));
  }
  SUBCASE("cube and the order-8 necklace differ") {
    const Graph necklace = k4_necklace(2).graph();
    CHECK(necklace.size() == 15);
    CHECK_FALSE(are_isomorphic(cube_graph(), necklace));
  }
  SUBCASE("the two 5-vertex polyhedra are not isomorphic") {
    CHECK_FALSE(are_isomorphic(square_pyramid_graph(), triangular_bipyramid_graph()));
    CHECK_FALSE(testing::brute_isomorphic(square_pyramid_graph(), triangular_bipyramid_graph()));
  }
  SUBCASE("agrees with permutation search on random graphs up to 7 vertices") {
    for (int trial = 0; trial < 400; ++trial) {
      const int n = 3 + trial % 5;
      const Graph a = random_graph(n, 0.5, rng);
      // Half the pairs are relabelings, half independent draws with equal size.
      Graph b = trial % 2 == 0 ? a.relabeled(testing::random_permutation(n, rng))
                               : random_graph(n, 0.5, rng);
      CHECK(are_isomorphic(a, b) == testing::brute_isomorphic(a, b));
    }
  }
  SUBCASE("same degree sequence, different graphs") {
    // C6 versus two disjoint triangles.
    const Graph c6 = Graph::cycle(6);
    const Graph triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(are_isomorphic(c6, triangles));
    // Prism versus K3,3: both 3-regular on 6 vertices.
    const Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    std::vector<Edge> k33;
    for (int u = 0; u < 3; ++u)
      for (int v = 3; v < 6; ++v) k33.emplace_back(u, v);
    CHECK_FALSE(are_isomorphic(prism, Graph(6, k33)));
  }
}

TEST_CASE("graph6") {
  CHECK(to_graph6(Graph::complete(4)) == "C~");
  CHECK(to_graph6(Graph(0, {})) == "?");
  CHECK(from_graph6(">>graph6<<C~\n") == Graph::complete(4));
  CHECK_THROWS_AS(from_graph6("C~~"), GraphError);
  CHECK_THROWS_AS(from_graph6(""), GraphError);

  std::mt19937 rng(11);
  for (int n : {1, 2, 5, 9, 17, 63, 70}) {
    const Graph g = random_graph(n, 0.3, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph JSON") {
  const ColoredGraph cube = base_graph(BaseGraph::Cube).with_k(1);
  const Json j = colored_to_json(cube);
  CHECK(j["n"] == 8);
  CHECK(j["edges"].size() == 12);
  CHECK(j.contains("rotation"));
  CHECK(j["red"] == Json({0, 3, 5, 6}));
  const ColoredGraph back = colored_from_json(j);
  CHECK(back.graph() == cube.graph());
  CHECK(back.red() == cube.red());
  CHECK(back.embedding() == cube.embedding());
  CHECK(back.provenance() == cube.provenance());

  CHECK_THROWS_AS(colored_from_json(Json::parse(R"({"n": 3})")), GraphError);
  CHECK_THROWS_AS(colored_from_json(Json::parse(R"({"n": 3, "edges": [[0, 3]]})")), GraphError);
  CHECK_THROWS_AS(colored_from_json(Json::parse(R"({"n": 3, "edges": [[0, 1]], "red": [5]})")),
                  GraphError);
  CHECK_THROWS_AS(colored_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1]], "k": 0})")),
                  GraphError);
  const auto minimal = colored_from_json(Json::parse(R"({"n": 2, "edges": [[1, 0]]})"));
  CHECK(minimal.k() == 1);
  CHECK(minimal.red().empty());
  CHECK_FALSE(minimal.has_embedding());
}

TEST_CASE("colored graph") {
  const ColoredGraph c(Graph::cycle(4), {2, 0, 2});
  CHECK(c.red() == std::vector<Vertex>{0, 2});
  CHECK(c.blue() == std::vector<Vertex>{1, 3});
  CHECK_FALSE(c.certified());
  CHECK_THROWS_AS(c.embedding(), GraphError);
  CHECK_THROWS_AS(c.with_k(0), GraphError);
}
