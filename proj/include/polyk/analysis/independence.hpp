#pragma once

#include <vector>

#include "polyk/core/graph.hpp"

namespace polyk {

/// Graphs above this order are outside the exact solver's envelope.
inline constexpr int kMaxExactOrder = 64;

class UnsupportedSizeError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Exact maximum independent set (sorted). Throws UnsupportedSizeError when
/// g.order() > kMaxExactOrder.
std::vector<Vertex> max_independent_set(const Graph& g);

/// Size of a largest k-independent set, i.e. alpha(g^k).
int k_independence_number(const Graph& g, int k);

/// A largest k-independent set (sorted).
std::vector<Vertex> max_k_independent_set(const Graph& g, int k);

}  // namespace polyk
