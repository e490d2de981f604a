#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyk/core/embedding.hpp"
#include "polyk/core/graph.hpp"

namespace polyk {

struct VerificationReport;
class ColoredGraph;
VerificationReport verify_certificate(const ColoredGraph& c);
ColoredGraph certify(ColoredGraph c);

/// A graph (optionally embedded) with a designated red vertex set that is
/// claimed to be k-independent. Blue is the complement of red.
class ColoredGraph {
 public:
  ColoredGraph(Graph graph, std::vector<Vertex> red, int k = 1);
  ColoredGraph(Embedding embedding, std::vector<Vertex> red, int k = 1);

  const Graph& graph() const { return graph_; }
  bool has_embedding() const { return embedding_.has_value(); }
  /// Throws GraphError when no embedding is attached.
  const Embedding& embedding() const;

  /// Sorted, duplicate free.
  const std::vector<Vertex>& red() const { return red_; }
  std::vector<Vertex> blue() const;
  bool is_red(Vertex v) const { return red_mask_[v] != 0; }
  int k() const { return k_; }

  /// Only set through certify(), after verify_certificate accepted the pair.
  bool certified() const { return certified_; }

  /// Steps applied to reach this graph, oldest first.
  const std::vector<std::string>& provenance() const { return provenance_; }

  ColoredGraph with_k(int k) const;
  ColoredGraph with_step(std::string step) const;
  ColoredGraph with_provenance(std::vector<std::string> steps) const;

 private:
  void init_red(std::vector<Vertex> red);

  Graph graph_;
  std::optional<Embedding> embedding_;
  std::vector<Vertex> red_;
  std::vector<char> red_mask_;
  int k_ = 1;
  bool certified_ = false;
  std::vector<std::string> provenance_;

  friend ColoredGraph certify(ColoredGraph c);
};

}  // namespace polyk
