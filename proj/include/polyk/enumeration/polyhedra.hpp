#pragma once

#include <set>
#include <string>
#include <vector>

#include "polyk/core/canon.hpp"
#include "polyk/core/graph.hpp"

namespace polyk {

inline constexpr int kMinPolyhedronOrder = 4;
inline constexpr int kMaxPolyhedronOrder = 9;

enum class GenerationKind { Triangulations, Polyhedra };

struct GenerationRun {
  int n = 0;
  GenerationKind kind = GenerationKind::Polyhedra;
  std::set<CanonCode> codes;
  /// Canonically labeled representatives, in code order.
  std::vector<Graph> graphs;

  std::size_t count() const { return graphs.size(); }
};

/// Worker count for enumeration: POLYK_THREADS if set and positive, else 1.
int enumeration_threads();

/// One representative per isomorphism class of 3-connected planar graphs on
/// n vertices, canonically labeled and sorted by canonical code.
///
/// Every planar graph is a spanning subgraph of a triangulation on the same
/// vertex set, and a non-triangular face of a polyhedron has a chord that
/// keeps it polyhedral, so every polyhedron is reached from a triangulation
/// through single-edge deletions that stay 3-connected. The search walks those
/// deletions level by level (pruned by min degree >= 3 and q >= ceil(3n/2)),
/// deduplicating by canonical code. Throws EnvelopeError outside 4..9.
GenerationRun enumerate_polyhedra(int n, int threads = 0);

GenerationRun enumerate_triangulation_run(int n);

std::string to_string(GenerationKind kind);

}  // namespace polyk
