#pragma once

#include <string>
#include <string_view>

#include "polyk/core/graph.hpp"

namespace polyk {

/// Standard graph6 text encoding (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
/// Throws GraphError on malformed input.
Graph from_graph6(std::string_view text);

}  // namespace polyk
