#include "polyk/core/json_io.hpp"

#include <fstream>
#include <sstream>

#include "polyk/core/graph6.hpp"

namespace polyk {

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

Json embedding_to_json(const Embedding& e) {
  Json j = graph_to_json(e.graph());
  j["rotation"] = e.rotations();
  return j;
}

Json colored_to_json(const ColoredGraph& c) {
  Json j = c.has_embedding() ? embedding_to_json(c.embedding()) : graph_to_json(c.graph());
  j["red"] = c.red();
  j["k"] = c.k();
  if (!c.provenance().empty()) j["provenance"] = c.provenance();
  return j;
}

ColoredGraph colored_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw GraphError("graph JSON must be an object");
    if (!j.contains("n") || !j.contains("edges"))
      throw GraphError("graph JSON needs \"n\" and \"edges\"");
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw GraphError("each edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Graph g(n, std::move(edges));
    std::vector<Vertex> red;
    if (j.contains("red")) red = j.at("red").get<std::vector<Vertex>>();
    const int k = j.contains("k") ? j.at("k").get<int>() : 1;
    std::vector<std::string> provenance;
    if (j.contains("provenance")) provenance = j.at("provenance").get<std::vector<std::string>>();
    if (j.contains("rotation")) {
      Embedding e(std::move(g), j.at("rotation").get<std::vector<std::vector<Vertex>>>());
      return ColoredGraph(std::move(e), std::move(red), k).with_provenance(std::move(provenance));
    }
    return ColoredGraph(std::move(g), std::move(red), k).with_provenance(std::move(provenance));
  } catch (const nlohmann::json::exception& ex) {
    throw GraphError(std::string("malformed graph JSON: ") + ex.what());
  }
}

ColoredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] != '{') {
    // graph6 carries no coloring.
    return ColoredGraph(from_graph6(text), {});
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw GraphError("cannot parse " + path + ": " + ex.what());
  }
  return colored_from_json(j);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace polyk
