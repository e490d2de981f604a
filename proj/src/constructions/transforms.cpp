#include "polyk/constructions/transforms.hpp"

#include <algorithm>
#include <array>

namespace polyk {

namespace {

bool alternates(const ColoredGraph& c, const FaceWalk& f) {
  if (f.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (c.is_red(f[i]) == c.is_red(f[(i + 1) % f.size()])) return false;
  return true;
}

}  // namespace

std::string PSite::describe() const {
  return "b1=" + std::to_string(b1) + " r1=" + std::to_string(r1) + " b2=" + std::to_string(b2) +
         " r2=" + std::to_string(r2) + " b3=" + std::to_string(b3) + " r3=" + std::to_string(r3);
}

std::string diagnose_p_site(const ColoredGraph& c, const PSite& s) {
  if (!c.has_embedding()) return "graph has no embedding";
  const int n = c.graph().order();
  std::array<Vertex, 6> all{s.b1, s.r1, s.b2, s.r2, s.b3, s.r3};
  for (Vertex v : all)
    if (v < 0 || v >= n) return "site vertex " + std::to_string(v) + " out of range";
  std::array<Vertex, 6> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return "site vertices are not distinct";
  for (Vertex b : {s.b1, s.b2, s.b3})
    if (c.is_red(b)) return "vertex " + std::to_string(b) + " should be blue";
  for (Vertex r : {s.r1, s.r2, s.r3})
    if (!c.is_red(r)) return "vertex " + std::to_string(r) + " should be red";
  const auto& e = c.embedding();
  if (!c.graph().has_edge(s.b1, s.r1) || !c.graph().has_edge(s.b2, s.r3))
    return "site edges missing";
  if (e.face_of_dart(s.b1, s.r1) != FaceWalk{s.b1, s.r1, s.b2, s.r2})
    return "first face is not the quadrilateral b1 r1 b2 r2";
  if (e.face_of_dart(s.b2, s.r3) != FaceWalk{s.b2, s.r3, s.b3, s.r2})
    return "second face is not the quadrilateral b2 r3 b3 r2";
  return {};
}

std::optional<PSite> find_p_site(const ColoredGraph& c) {
  if (!c.has_embedding()) return std::nullopt;
  const auto& e = c.embedding();
  for (const auto& f : e.faces()) {
    if (f.size() != 4 || !alternates(c, f)) continue;
    for (std::size_t i = 0; i < 4; ++i) {
      const Vertex b2 = f[i], r2 = f[(i + 1) % 4];
      if (c.is_red(b2)) continue;
      const FaceWalk other = e.face_of_dart(r2, b2);
      if (other.size() != 4) continue;
      PSite site{f[(i + 2) % 4], f[(i + 3) % 4], b2, r2, other[3], other[2]};
      if (diagnose_p_site(c, site).empty()) return site;
    }
  }
  return std::nullopt;
}

ColoredGraph transform_p(const ColoredGraph& c, const PSite& s) {
  if (auto why = diagnose_p_site(c, s); !why.empty())
    throw GraphError("invalid P site (" + s.describe() + "): " + why);
  RotationSystem rot = c.embedding().rotation_system();
  const Vertex ra = rot.order(), rb = ra + 1, bn = ra + 2;
  rot.remove_edge(s.b2, s.r2);
  rot.add_vertex({s.b2, s.b1, bn});
  rot.add_vertex({s.b3, s.b2, bn});
  rot.add_vertex({s.r2, rb, ra});
  rot.insert_after(s.b1, s.r2, ra);
  rot.insert_after(s.b2, s.r1, ra);
  rot.insert_after(s.b2, ra, rb);
  rot.insert_after(s.b3, s.r3, rb);
  rot.insert_after(s.r2, s.b3, bn);

  auto red = c.red();
  red.push_back(ra);
  red.push_back(rb);
  return ColoredGraph(Embedding::from_rotation(rot), std::move(red), c.k())
      .with_provenance(c.provenance())
      .with_step("P(" + s.describe() + ")");
}

ColoredGraph transform_q(const ColoredGraph& c, Vertex v) {
  const Graph& g = c.graph();
  if (v < 0 || v >= g.order()) throw GraphError("Q: vertex " + std::to_string(v) + " out of range");
  if (g.degree(v) != 3)
    throw GraphError("Q needs a degree-3 vertex; vertex " + std::to_string(v) + " has degree " +
                     std::to_string(g.degree(v)));
  RotationSystem rot = c.embedding().rotation_system();
  const auto around = rot.at(v);
  const Vertex x = around[0], y = around[1], z = around[2];
  const Vertex a = rot.order(), b = a + 1, cc = a + 2;
  rot.replace(x, v, a);
  rot.replace(y, v, b);
  rot.replace(z, v, cc);
  rot.add_vertex({x, b, v, cc});
  rot.add_vertex({a, y, cc, v});
  rot.add_vertex({b, z, a, v});
  auto raw = rot.lists();
  raw[v] = {a, b, cc};
  return ColoredGraph(Embedding::from_rotation(RotationSystem(std::move(raw))), c.red(), c.k())
      .with_provenance(c.provenance())
      .with_step("Q(" + std::to_string(v) + ")");
}

}  // namespace polyk
