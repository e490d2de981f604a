#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polyk/core/canon.hpp"
#include "polyk/core/embedding.hpp"

namespace polyk {

class EnvelopeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr int kMinTriangulationOrder = 4;
inline constexpr int kMaxTriangulationOrder = 10;

/// Diagonal flip of edge uv in a triangulation: the triangles u v w and
/// v u t become w t ... with uv replaced by wt. Returns nullopt (flip
/// rejected) when uv is not an edge, w == t, or wt is already an edge.
std::optional<Embedding> flip(const Embedding& e, Vertex u, Vertex v);

/// K4 grown by inserting a degree-3 vertex into the first traced face, n - 4
/// times.
Embedding stacked_triangulation(int n);

/// One representative per isomorphism class of maximal planar graphs on n
/// vertices, sorted by canonical code. Found by breadth-first search over
/// diagonal flips from the stacked triangulation; the flip graph on unlabeled
/// triangulations of fixed order is connected. Throws EnvelopeError outside
/// 4..10.
std::vector<Embedding> enumerate_triangulations(int n);

}  // namespace polyk
