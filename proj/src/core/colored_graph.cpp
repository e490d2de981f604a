#include "polyk/core/colored_graph.hpp"

#include <algorithm>

namespace polyk {

ColoredGraph::ColoredGraph(Graph graph, std::vector<Vertex> red, int k)
    : graph_(std::move(graph)), k_(k) {
  init_red(std::move(red));
}

ColoredGraph::ColoredGraph(Embedding embedding, std::vector<Vertex> red, int k)
    : graph_(embedding.graph()), embedding_(std::move(embedding)), k_(k) {
  init_red(std::move(red));
}

void ColoredGraph::init_red(std::vector<Vertex> red) {
  if (k_ < 1) throw GraphError("independence radius k must be positive, got " + std::to_string(k_));
  for (Vertex v : red)
    if (v < 0 || v >= graph_.order())
      throw GraphError("red vertex " + std::to_string(v) + " is not a vertex");
  std::sort(red.begin(), red.end());
  red.erase(std::unique(red.begin(), red.end()), red.end());
  red_ = std::move(red);
  red_mask_.assign(graph_.order(), 0);
  for (Vertex v : red_) red_mask_[v] = 1;
}

const Embedding& ColoredGraph::embedding() const {
  if (!embedding_) throw GraphError("colored graph carries no embedding");
  return *embedding_;
}

std::vector<Vertex> ColoredGraph::blue() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph_.order(); ++v)
    if (!red_mask_[v]) out.push_back(v);
  return out;
}

ColoredGraph ColoredGraph::with_k(int k) const {
  ColoredGraph copy = *this;
  if (k < 1) throw GraphError("independence radius k must be positive, got " + std::to_string(k));
  copy.k_ = k;
  copy.certified_ = false;
  return copy;
}

ColoredGraph ColoredGraph::with_step(std::string step) const {
  ColoredGraph copy = *this;
  copy.provenance_.push_back(std::move(step));
  return copy;
}

ColoredGraph ColoredGraph::with_provenance(std::vector<std::string> steps) const {
  ColoredGraph copy = *this;
  copy.provenance_ = std::move(steps);
  return copy;
}

}  // namespace polyk
