#pragma once

#include <string>

#include <json.hpp>

#include "polyk/core/colored_graph.hpp"

namespace polyk {

using Json = nlohmann::ordered_json;

// Graph interchange object:
//   {"n": int, "edges": [[u,v],...], "rotation": [[...],...], "red": [...],
//    "k": int, "provenance": [...]}
// Only "n" and "edges" are required.

Json graph_to_json(const Graph& g);
Json embedding_to_json(const Embedding& e);
Json colored_to_json(const ColoredGraph& c);

/// Throws GraphError on schema violations.
ColoredGraph colored_from_json(const Json& j);

ColoredGraph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace polyk
