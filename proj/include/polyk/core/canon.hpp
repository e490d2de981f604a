#pragma once

#include <compare>
#include <string>
#include <vector>

#include "polyk/core/graph.hpp"

namespace polyk {

/// Isomorphism-invariant code: the graph6 string of the canonically relabeled
/// graph. Two graphs have equal codes iff they are isomorphic.
struct CanonCode {
  std::string bytes;
  int n = 0;

  std::string hex() const;
  friend auto operator<=>(const CanonCode&, const CanonCode&) = default;
  friend bool operator==(const CanonCode&, const CanonCode&) = default;
};

struct CanonicalLabeling {
  /// order[i] is the original vertex placed at canonical position i.
  std::vector<Vertex> order;
  CanonCode code;
};

/// Individualization-refinement search over equitable partitions with
/// automorphism pruning. Comfortable up to a few dozen vertices.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonCode canonical_form(const Graph& g);
/// The canonically relabeled copy of g.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace polyk
