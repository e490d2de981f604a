#include "polyk/enumeration/oracles.hpp"

#include <algorithm>
#include <set>

#include "polyk/analysis/distance.hpp"
#include "polyk/analysis/independence.hpp"
#include "polyk/analysis/structure.hpp"
#include "polyk/analysis/verify.hpp"
#include "polyk/constructions/formula.hpp"
#include "polyk/constructions/radial.hpp"
#include "polyk/enumeration/polyhedra.hpp"

namespace polyk {

std::size_t MinimalityReport::graphs_scanned() const {
  std::size_t total = 0;
  for (const auto& l : levels) total += l.graphs;
  return total;
}

std::string MinimalityReport::summary() const {
  if (levels.empty())
    return "no polyhedra below order " + std::to_string(formula_order) + "; bound holds trivially";
  const auto& top = levels.back();
  const std::string measure = k == 1 ? "α" : "α_" + std::to_string(k);
  return std::to_string(top.graphs) + " polyhedra on " + std::to_string(top.n) +
         " vertices scanned, max " + measure + " = " + std::to_string(top.max_value);
}

Json MinimalityReport::to_json() const {
  Json j;
  j["k"] = k;
  j["a"] = a;
  j["formula_order"] = formula_order;
  j["holds"] = holds;
  j["graphs_scanned"] = graphs_scanned();
  Json lv = Json::array();
  for (const auto& l : levels)
    lv.push_back({{"n", l.n}, {"graphs", l.graphs}, {"max_value", l.max_value},
                  {"max_diameter", l.max_diameter}});
  j["levels"] = std::move(lv);
  j["summary"] = summary();
  return j;
}

MinimalityReport minimality_oracle(int k, int a) {
  MinimalityReport report;
  report.k = k;
  report.a = a;
  report.formula_order = p_formula(k, a);
  const long long top = report.formula_order - 1;
  if (top > kMaxPolyhedronOrder)
    throw EnvelopeError("p(" + std::to_string(k) + "," + std::to_string(a) + ") - 1 = " +
                        std::to_string(top) + " is out of desk-scale envelope (max " +
                        std::to_string(kMaxPolyhedronOrder) + ")");
  report.holds = true;
  for (int n = kMinPolyhedronOrder; n <= top; ++n) {
    MinimalityLevel level;
    level.n = n;
    for (const auto& g : enumerate_polyhedra(n).graphs) {
      ++level.graphs;
      level.max_value = std::max(level.max_value, k_independence_number(g, k));
      level.max_diameter = std::max(level.max_diameter, diameter(g));
    }
    if (level.max_value >= a) report.holds = false;
    report.levels.push_back(level);
  }
  return report;
}

Json ClassificationReport::to_json() const {
  Json j;
  j["a"] = a;
  j["order"] = order;
  j["forward_ok"] = forward_ok;
  Json fw = Json::array();
  for (const auto& f : forward)
    fw.push_back({{"triangulation", f.triangulation},
                  {"order", f.order},
                  {"size", f.size},
                  {"alpha", f.alpha},
                  {"polyhedral", f.polyhedral},
                  {"quadrangulation", f.quadrangulation},
                  {"separating_quadrilateral", f.separating_quadrilateral},
                  {"ok", f.ok}});
  j["forward"] = std::move(fw);
  if (reverse) {
    j["reverse"] = {{"polyhedra", reverse->polyhedra},
                    {"candidates", reverse->candidates},
                    {"min_edges", reverse->min_edges},
                    {"minimizers", reverse->minimizers},
                    {"radial_graphs", reverse->radial_graphs},
                    {"matches", reverse->matches}};
  } else {
    j["reverse"] = nullptr;
  }
  j["notes"] = notes;
  j["passed"] = passed();
  return j;
}

ClassificationReport classify_extremal(int a, bool forward_only) {
  if (a < 4 || a % 2 != 0)
    throw GraphError("classification needs an even a >= 4, got " + std::to_string(a));
  ClassificationReport report;
  report.a = a;
  report.order = p_formula(1, a);
  const int tri_order = a / 2 + 2;

  std::set<CanonCode> radial_codes;
  report.forward_ok = true;
  for (const auto& tri : enumerate_triangulations(tri_order)) {
    const ColoredGraph radial = radial_graph(tri);
    const Graph& g = radial.graph();
    ForwardEntry entry;
    entry.triangulation = canonical_form(tri.graph()).hex();
    entry.order = g.order();
    entry.size = g.size();
    entry.alpha = static_cast<int>(max_independent_set(g).size());
    entry.polyhedral = is_polyhedral(g).polyhedral;
    entry.quadrangulation = is_quadrangulation(radial.embedding());
    entry.separating_quadrilateral = has_separating_quadrilateral(radial.embedding());
    entry.ok = entry.order == report.order && entry.size == 2 * entry.order - 4 &&
               entry.alpha >= a && entry.polyhedral && entry.quadrangulation &&
               !entry.separating_quadrilateral;
    report.forward_ok = report.forward_ok && entry.ok;
    radial_codes.insert(canonical_form(g));
    report.forward.push_back(std::move(entry));
  }

  if (forward_only) {
    report.notes.push_back("reverse direction skipped on request");
    return report;
  }
  if (report.order > kMaxPolyhedronOrder) {
    report.notes.push_back("reverse direction needs polyhedra on " + std::to_string(report.order) +
                           " vertices, beyond the enumeration envelope; forward only");
    return report;
  }

  ReverseCheck rev;
  const auto run = enumerate_polyhedra(static_cast<int>(report.order));
  rev.polyhedra = run.count();
  std::vector<const Graph*> candidates;
  for (const auto& g : run.graphs)
    if (static_cast<int>(max_independent_set(g).size()) >= a) candidates.push_back(&g);
  rev.candidates = candidates.size();
  rev.radial_graphs = radial_codes.size();
  if (!candidates.empty()) {
    rev.min_edges = (*std::min_element(candidates.begin(), candidates.end(),
                                       [](const Graph* x, const Graph* y) {
                                         return x->size() < y->size();
                                       }))->size();
    std::set<CanonCode> minimizers;
    for (const Graph* g : candidates)
      if (g->size() == rev.min_edges) minimizers.insert(canonical_form(*g));
    rev.minimizers = minimizers.size();
    rev.matches = minimizers == radial_codes;
  }
  report.reverse = rev;
  return report;
}

}  // namespace polyk
