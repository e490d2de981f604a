#include "polyk/constructions/corollary.hpp"

#include <algorithm>

#include "polyk/analysis/connectivity.hpp"

namespace polyk {

CorollaryReport check_odd_corollary(const ColoredGraph& c) {
  const int a = static_cast<int>(c.red().size());
  if (a < 3 || a % 2 == 0)
    throw GraphError("corollary check needs an odd red set of size >= 3, got " + std::to_string(a));
  const Embedding& e = c.embedding();

  CorollaryReport report;
  RotationSystem rot = e.rotation_system();
  for (const auto& [u, v] : e.graph().edges()) {
    if (!c.is_red(u) && !c.is_red(v)) {
      rot.remove_edge(u, v);
      ++report.removed_blue_edges;
    }
  }
  Embedding h = Embedding::from_rotation(rot);
  if (!is_connected(h.graph())) {
    report.message = "removing blue-blue edges disconnects the graph";
    return report;
  }

  const auto faces = h.faces();
  std::vector<FaceWalk> odd_faces;
  for (const auto& f : faces)
    if (f.size() != 4) odd_faces.push_back(f);

  report.branch = "H";
  if (!odd_faces.empty()) {
    const FaceWalk& hex = odd_faces.front();
    if (odd_faces.size() > 1 || hex.size() != 6) {
      report.offending_face = hex;
      report.message = "face of length " + std::to_string(hex.size()) +
                       " remains after removing blue-blue edges";
      return report;
    }
    for (std::size_t i = 0; i < 6; ++i) {
      if (c.is_red(hex[i]) == c.is_red(hex[(i + 1) % 6])) {
        report.offending_face = hex;
        report.message = "hexagonal face does not alternate colors";
        return report;
      }
    }
    // Opposite corners of an alternating hexagon have opposite colors.
    for (std::size_t i = 0; i < 3 && !report.chord; ++i) {
      const Vertex u = hex[i], w = hex[i + 3];
      if (h.graph().has_edge(u, w)) continue;
      RotationSystem with_chord = h.rotation_system();
      with_chord.insert_after(u, hex[(i + 5) % 6], w);
      with_chord.insert_after(w, hex[i + 2], u);
      h = Embedding::from_rotation(with_chord);
      report.chord = Edge{std::min(u, w), std::max(u, w)};
    }
    if (!report.chord) {
      report.offending_face = hex;
      report.message = "every diagonal of the hexagon is already an edge";
      return report;
    }
    report.branch = "H'";
  }

  for (const auto& f : h.faces()) {
    if (f.size() != 4) {
      report.offending_face = f;
      report.message = "non-quadrilateral face after the chord";
      return report;
    }
  }
  if (h.euler_characteristic() != 2) {
    report.message = "result is not a spherical embedding";
    return report;
  }
  if (!is_k_connected(h.graph(), 2).connected) {
    report.message = "result is not 2-connected";
    return report;
  }
  report.passed = true;
  report.message = report.branch == "H" ? "quadrangulation after removing blue-blue edges"
                                        : "quadrangulation after adding one red-blue chord";
  return report;
}

}  // namespace polyk
