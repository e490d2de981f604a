#include "polyk/analysis/independence.hpp"

#include <array>
#include <bit>
#include <cstdint>

#include "polyk/analysis/distance.hpp"

namespace polyk {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Branch and bound on bitsets: fold in vertices of degree <= 1, bound with a
// greedy clique cover, branch on a maximum-degree vertex.
class MisSolver {
 public:
  explicit MisSolver(const Graph& g) : n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.neighbor_mask(v);
  }

  Mask solve() {
    const Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    expand(all, 0);
    return best_;
  }

 private:
  int clique_cover(Mask cand) const {
    int cliques = 0;
    while (cand) {
      const int v = std::countr_zero(cand);
      Mask members = bit(v);
      Mask extend = adj_[v] & cand;
      while (extend) {
        const int u = std::countr_zero(extend);
        members |= bit(u);
        extend &= adj_[u];
      }
      cand &= ~members;
      ++cliques;
    }
    return cliques;
  }

  void expand(Mask cand, Mask current) {
    bool reduced = true;
    while (reduced && cand) {
      reduced = false;
      for (Mask scan = cand; scan; scan &= scan - 1) {
        const int v = std::countr_zero(scan);
        if (!(cand & bit(v))) continue;
        if (std::popcount(adj_[v] & cand) <= 1) {
          current |= bit(v);
          cand &= ~(adj_[v] | bit(v));
          reduced = true;
        }
      }
    }
    const int size = std::popcount(current);
    if (!cand) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = current;
      }
      return;
    }
    if (size + clique_cover(cand) <= best_size_) return;

    int pivot = -1, pivot_degree = -1;
    for (Mask scan = cand; scan; scan &= scan - 1) {
      const int v = std::countr_zero(scan);
      const int d = std::popcount(adj_[v] & cand);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    expand(cand & ~(adj_[pivot] | bit(pivot)), current | bit(pivot));
    expand(cand & ~bit(pivot), current);
  }

  int n_;
  std::array<Mask, 64> adj_{};
  Mask best_ = 0;
  int best_size_ = -1;
};

}  // namespace

std::vector<Vertex> max_independent_set(const Graph& g) {
  if (g.order() > kMaxExactOrder)
    throw UnsupportedSizeError("exact independence supports at most " +
                               std::to_string(kMaxExactOrder) + " vertices, got " +
                               std::to_string(g.order()));
  const Mask best = MisSolver(g).solve();
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (best & bit(v)) out.push_back(v);
  return out;
}

std::vector<Vertex> max_k_independent_set(const Graph& g, int k) {
  if (g.order() > kMaxExactOrder)
    throw UnsupportedSizeError("exact independence supports at most " +
                               std::to_string(kMaxExactOrder) + " vertices, got " +
                               std::to_string(g.order()));
  return max_independent_set(graph_power(g, k));
}

int k_independence_number(const Graph& g, int k) {
  return static_cast<int>(max_k_independent_set(g, k).size());
}

}  // namespace polyk
