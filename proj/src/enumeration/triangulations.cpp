#include "polyk/enumeration/triangulations.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace polyk {

std::optional<Embedding> flip(const Embedding& e, Vertex u, Vertex v) {
  const Graph& g = e.graph();
  if (!g.has_edge(u, v)) return std::nullopt;
  const Vertex w = e.successor(v, u);  // face u -> v -> w
  const Vertex t = e.successor(u, v);  // face v -> u -> t
  if (w == t || g.has_edge(w, t)) return std::nullopt;
  // Both sides must be triangles.
  if (e.successor(w, v) != u || e.successor(t, u) != v) return std::nullopt;

  RotationSystem rot = e.rotation_system();
  rot.remove_edge(u, v);
  rot.insert_after(w, v, t);
  rot.insert_after(t, u, w);
  return Embedding::from_rotation(rot);
}

Embedding stacked_triangulation(int n) {
  if (n < 4) throw EnvelopeError("triangulations need at least 4 vertices");
  RotationSystem rot({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
  // Orient the seed consistently with the tracing rule.
  Embedding e = Embedding::from_rotation(rot);
  if (e.euler_characteristic() != 2) throw std::logic_error("seed K4 rotation is not planar");
  for (int next = 4; next < n; ++next) {
    const FaceWalk f = e.faces().front();  // a triangle x -> y -> z
    RotationSystem grow = e.rotation_system();
    const Vertex x = f[0], y = f[1], z = f[2];
    // Corner at x sits between z (incoming) and y (outgoing).
    grow.insert_after(x, z, next);
    grow.insert_after(y, x, next);
    grow.insert_after(z, y, next);
    grow.add_vertex({x, z, y});
    e = Embedding::from_rotation(grow);
  }
  return e;
}

std::vector<Embedding> enumerate_triangulations(int n) {
  if (n < kMinTriangulationOrder || n > kMaxTriangulationOrder)
    throw EnvelopeError("triangulation enumeration supports 4 <= n <= 10, got " +
                        std::to_string(n));
  std::map<CanonCode, Embedding> seen;
  std::deque<const Embedding*> queue;
  Embedding seed = stacked_triangulation(n);
  auto [it, inserted] = seen.emplace(canonical_form(seed.graph()), std::move(seed));
  queue.push_back(&it->second);
  while (!queue.empty()) {
    const Embedding& current = *queue.front();
    queue.pop_front();
    for (const auto& [u, v] : current.graph().edges()) {
      auto flipped = flip(current, u, v);
      if (!flipped) continue;
      auto code = canonical_form(flipped->graph());
      if (seen.contains(code)) continue;
      auto [pos, ok] = seen.emplace(std::move(code), std::move(*flipped));
      queue.push_back(&pos->second);
    }
  }
  std::vector<Embedding> out;
  out.reserve(seen.size());
  for (auto& [code, emb] : seen) out.push_back(std::move(emb));
  return out;
}

}  // namespace polyk
