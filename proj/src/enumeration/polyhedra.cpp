#include "polyk/enumeration/polyhedra.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

#include "polyk/analysis/connectivity.hpp"
#include "polyk/enumeration/triangulations.hpp"

namespace polyk {

int enumeration_threads() {
  if (const char* env = std::getenv("POLYK_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

std::string to_string(GenerationKind kind) {
  return kind == GenerationKind::Triangulations ? "triangulations" : "polyhedra";
}

namespace {

using Level = std::map<CanonCode, Graph>;

void expand_range(const std::vector<const Graph*>& parents, std::size_t begin, std::size_t end,
                  Level& out) {
  for (std::size_t i = begin; i < end; ++i) {
    const Graph& g = *parents[i];
    for (const auto& [u, v] : g.edges()) {
      if (g.degree(u) <= 3 || g.degree(v) <= 3) continue;
      Graph child = g.without_edge(u, v);
      if (!is_k_connected(child, 3).connected) continue;
      auto labeling = canonical_labeling(child);
      if (out.contains(labeling.code)) continue;
      std::vector<Vertex> perm(child.order());
      for (int p = 0; p < child.order(); ++p) perm[labeling.order[p]] = p;
      out.emplace(std::move(labeling.code), child.relabeled(perm));
    }
  }
}

}  // namespace

GenerationRun enumerate_triangulation_run(int n) {
  GenerationRun run;
  run.n = n;
  run.kind = GenerationKind::Triangulations;
  for (const auto& e : enumerate_triangulations(n)) {
    const auto labeling = canonical_labeling(e.graph());
    std::vector<Vertex> perm(n);
    for (int p = 0; p < n; ++p) perm[labeling.order[p]] = p;
    run.codes.insert(labeling.code);
    run.graphs.push_back(e.graph().relabeled(perm));
  }
  return run;
}

GenerationRun enumerate_polyhedra(int n, int threads) {
  if (n < kMinPolyhedronOrder || n > kMaxPolyhedronOrder)
    throw EnvelopeError("polyhedron enumeration supports 4 <= n <= 9, got " + std::to_string(n));
  if (threads <= 0) threads = enumeration_threads();
  const int min_edges = (3 * n + 1) / 2;

  Level all;
  Level level;
  for (const auto& e : enumerate_triangulations(n)) {
    auto code = canonical_form(e.graph());
    level.emplace(code, canonical_graph(e.graph()));
  }
  while (!level.empty()) {
    for (const auto& [code, g] : level) all.emplace(code, g);
    const int edges_now = level.begin()->second.size();
    if (edges_now - 1 < min_edges) break;

    std::vector<const Graph*> parents;
    for (const auto& [code, g] : level) parents.push_back(&g);
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(parents.size(), 1));
    std::vector<Level> partial(workers);
    if (workers == 1) {
      expand_range(parents, 0, parents.size(), partial[0]);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (parents.size() + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(parents.size(), w * chunk);
        const std::size_t end = std::min(parents.size(), begin + chunk);
        pool.emplace_back([&, begin, end, w] { expand_range(parents, begin, end, partial[w]); });
      }
    }
    Level next;
    for (auto& part : partial) next.merge(part);
    level = std::move(next);
  }

  GenerationRun run;
  run.n = n;
  run.kind = GenerationKind::Polyhedra;
  for (auto& [code, g] : all) {
    run.codes.insert(code);
    run.graphs.push_back(std::move(g));
  }
  return run;
}

}  // namespace polyk
