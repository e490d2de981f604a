#include "polyk/constructions/builder.hpp"

#include <stdexcept>

#include "polyk/constructions/base_graphs.hpp"
#include "polyk/constructions/formula.hpp"
#include "polyk/constructions/transforms.hpp"

namespace polyk {

namespace {

ColoredGraph p_chain(ColoredGraph start, int steps) {
  for (int i = 0; i < steps; ++i) {
    const auto site = find_p_site(start);
    if (!site) throw std::logic_error("no P site available after " + std::to_string(i) + " steps");
    start = transform_p(start, *site);
  }
  return start;
}

}  // namespace

ColoredGraph build_independent_extremal(int a, bool all_red_deg3) {
  if (a < 1) throw GraphError("a must be positive, got " + std::to_string(a));
  switch (a) {
    case 1: return base_graph(BaseGraph::Tetrahedron);
    case 2: return base_graph(BaseGraph::SquarePyramid);
    case 3: return base_graph(BaseGraph::G3);
    case 4: return base_graph(BaseGraph::Cube);
    default: break;
  }
  if (a % 2 == 0) return p_chain(base_graph(BaseGraph::Cube), (a - 4) / 2);
  if (all_red_deg3) return p_chain(base_graph(BaseGraph::G3), (a - 3) / 2);
  return p_chain(base_graph(BaseGraph::Pdw10), (a - 5) / 2);
}

ColoredGraph q_round(const ColoredGraph& c) {
  ColoredGraph out = c;
  for (Vertex v : c.red()) out = transform_q(out, v);
  return out;
}

ExtremalInstance build_extremal(int k, int a, bool all_red_deg3) {
  const long long expected = p_formula(k, a);
  ColoredGraph g = [&] {
    if (a == 1) return base_graph(BaseGraph::Tetrahedron);
    if (k == 1) return build_independent_extremal(a, all_red_deg3);
    ColoredGraph start = k % 2 == 0 ? k4_necklace(a) : build_independent_extremal(a, true);
    const int rounds = k % 2 == 0 ? k / 2 - 1 : (k - 1) / 2;
    for (int i = 0; i < rounds; ++i) start = q_round(start);
    return start;
  }();
  g = certify(g.with_k(k));
  ExtremalInstance inst{k, a, all_red_deg3, g, verify_certificate(g)};
  if (!inst.result.certified())
    throw std::logic_error("construction for k=" + std::to_string(k) + " a=" + std::to_string(a) +
                           " failed verification");
  if (inst.result.graph().order() != expected)
    throw std::logic_error("construction for k=" + std::to_string(k) + " a=" + std::to_string(a) +
                           " has order " + std::to_string(inst.result.graph().order()) +
                           ", expected " + std::to_string(expected));
  return inst;
}

}  // namespace polyk
