#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyk/core/json_io.hpp"
#include "polyk/enumeration/triangulations.hpp"

namespace polyk {

struct MinimalityLevel {
  int n = 0;
  std::size_t graphs = 0;
  int max_value = 0;     ///< largest k-independence number seen
  int max_diameter = 0;
};

/// Exhaustive lower-bound check: no polyhedron on fewer than p(k, a)
/// vertices has a k-independent set of size a.
struct MinimalityReport {
  int k = 1;
  int a = 1;
  long long formula_order = 0;
  /// One entry per order 4..p(k,a)-1; the last one is the headline scan.
  std::vector<MinimalityLevel> levels;
  bool holds = false;

  std::size_t graphs_scanned() const;
  std::string summary() const;
  Json to_json() const;
};

/// Throws EnvelopeError when p(k, a) - 1 > 9.
MinimalityReport minimality_oracle(int k, int a);

struct ForwardEntry {
  std::string triangulation;  ///< canonical code, hex
  int order = 0;
  int size = 0;
  int alpha = 0;
  bool polyhedral = false;
  bool quadrangulation = false;
  bool separating_quadrilateral = false;
  bool ok = false;
};

struct ReverseCheck {
  std::size_t polyhedra = 0;
  std::size_t candidates = 0;   ///< polyhedra with alpha >= a
  int min_edges = 0;
  std::size_t minimizers = 0;
  std::size_t radial_graphs = 0;
  bool matches = false;         ///< minimizer set equals the radial set
};

/// Both directions of the characterization of extremal graphs for even a:
/// forward over every triangulation with a faces, reverse by exhaustive scan
/// of polyhedra on p(1, a) vertices when that order is at most 9.
struct ClassificationReport {
  int a = 0;
  long long order = 0;
  std::vector<ForwardEntry> forward;
  bool forward_ok = false;
  std::optional<ReverseCheck> reverse;
  std::vector<std::string> notes;

  bool passed() const { return forward_ok && (!reverse || reverse->matches); }
  Json to_json() const;
};

/// Throws GraphError unless a is even and >= 4; EnvelopeError when the
/// triangulations on a/2 + 2 vertices are out of range.
ClassificationReport classify_extremal(int a, bool forward_only = false);

}  // namespace polyk
