#pragma once

#include "polyk/analysis/verify.hpp"
#include "polyk/core/colored_graph.hpp"

namespace polyk {

struct ExtremalInstance {
  int k = 1;
  int a = 1;
  bool all_red_deg3 = false;
  /// Embedded, certified; order equals p_formula(k, a).
  ColoredGraph result;
  VerificationReport report;
};

/// Polyhedral graph of order p(k, a) with a certified k-independent red set
/// of size a.
///   a = 1       tetrahedron
///   k = 1       square pyramid, G3, cube, PDW10, then P steps on the cube
///               (even a) or PDW10 (odd a); with all_red_deg3 the odd chain
///               starts from G3 instead
///   k even      K4 necklace, then k/2 - 1 rounds of Q over every red vertex
///   k odd >= 3  degree-3 extremal graph for (1, a), then (k-1)/2 Q rounds
/// Throws GraphError for k < 1 or a < 1, and std::logic_error if the result
/// fails verification.
ExtremalInstance build_extremal(int k, int a, bool all_red_deg3 = false);

/// Extremal graph for k = 1 built by P steps.
ColoredGraph build_independent_extremal(int a, bool all_red_deg3);

/// One Q application on every red vertex, in increasing vertex order.
ColoredGraph q_round(const ColoredGraph& c);

}  // namespace polyk
