#pragma once

#include <optional>

#include "polyk/core/embedding.hpp"

namespace polyk {

struct PlanarityResult {
  bool planar = false;
  /// Present iff planar; rotations describe a genus-0 embedding.
  std::optional<Embedding> embedding;
};

/// Boyer-Myrvold test with embedding extraction, after the q <= 3p-6 filter.
PlanarityResult is_planar(const Graph& g);

/// Throws GraphError when g is not planar.
Embedding planar_embedding(const Graph& g);

}  // namespace polyk
