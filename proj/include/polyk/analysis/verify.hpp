#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyk/core/colored_graph.hpp"
#include "polyk/core/json_io.hpp"

namespace polyk {

/// Pass/fail evidence for polyhedrality and k-independence certificates.
/// certificate_valid implies planar, three_connected and order >= 4.
struct VerificationReport {
  bool simple = true;
  bool planar = false;
  bool three_connected = false;
  bool polyhedral = false;
  bool certificate_valid = false;

  int order = 0;
  int size = 0;
  int k = 1;
  int certificate_size = 0;
  /// Exact alpha(G^k) when the order is inside the solver envelope.
  std::optional<int> measured_independence;
  /// p(k, |red|) when a certificate was checked.
  std::optional<long long> expected_order;

  std::optional<std::vector<Vertex>> cut_witness;
  std::optional<std::pair<Vertex, Vertex>> close_pair;
  std::optional<int> close_pair_distance;
  std::vector<std::string> notes;

  Json to_json() const;
};

/// simple, n >= 4, planar and 3-connected.
VerificationReport is_polyhedral(const Graph& g);

/// Polyhedrality plus d(u,v) > k for every pair of red vertices.
VerificationReport verify_certificate(const ColoredGraph& c);

/// Returns c with its certified flag set when verify_certificate accepts it.
ColoredGraph certify(ColoredGraph c);

}  // namespace polyk
