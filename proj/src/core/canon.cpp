#include "polyk/core/canon.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace polyk {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()), adj_(n_ * n_, 0) {
    for (const auto& [u, v] : g.edges()) adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  }

  CanonicalLabeling run() {
    Cells cells;
    if (n_ > 0) {
      // The first refinement pass splits by degree.
      std::vector<Vertex> all(n_);
      std::iota(all.begin(), all.end(), 0);
      cells.push_back(std::move(all));
    }
    refine(cells);
    std::vector<Vertex> prefix;
    search(cells, prefix);
    if (n_ == 0) return {{}, CanonCode{leaf_code({}), 0}};
    return {best_order_, CanonCode{best_code_, n_}};
  }

 private:
  void refine(Cells& cells) const {
    std::vector<int> cell_of(n_);
    for (;;) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (Vertex v : cells[c]) cell_of[v] = static_cast<int>(c);
      const std::size_t k = cells.size();
      Cells next;
      next.reserve(n_);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, Vertex>> sig;
        sig.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<int> counts(k, 0);
          for (Vertex w : g_.neighbors(v)) ++counts[cell_of[w]];
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        std::vector<Vertex> group{sig[0].second};
        for (std::size_t i = 1; i < sig.size(); ++i) {
          if (sig[i].first != sig[i - 1].first) {
            next.push_back(std::move(group));
            group.clear();
          }
          group.push_back(sig[i].second);
        }
        next.push_back(std::move(group));
      }
      const bool stable = next.size() == k;
      cells = std::move(next);
      if (stable) return;
    }
  }

  std::string leaf_code(const std::vector<Vertex>& order) const {
    std::string out;
    out.push_back(static_cast<char>(n_ + 63));
    if (n_ > 62) {
      out.back() = 126;
      for (int shift = 12; shift >= 0; shift -= 6)
        out.push_back(static_cast<char>(((n_ >> shift) & 63) + 63));
    }
    int bits = 0, acc = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        acc = (acc << 1) | adj_[order[i] * n_ + order[j]];
        if (++bits == 6) {
          out.push_back(static_cast<char>(acc + 63));
          bits = acc = 0;
        }
      }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    bool identity = true;
    for (int v = 0; v < n_ && identity; ++v) identity = gamma[v] == v;
    if (!identity) generators_.push_back(std::move(gamma));
  }

  // Union-find orbits of the group generated by stored automorphisms that fix
  // every vertex of prefix.
  std::vector<Vertex> orbits_fixing(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : generators_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(const Cells& cells, std::vector<Vertex>& prefix) {
    if (static_cast<int>(cells.size()) == n_) {
      std::vector<Vertex> order(n_);
      for (int i = 0; i < n_; ++i) order[i] = cells[i][0];
      std::string code = leaf_code(order);
      if (!first_order_) {
        first_order_ = order;
        first_code_ = code;
        best_order_ = order;
        best_code_ = std::move(code);
        return;
      }
      if (code == *first_code_) {
        record_automorphism(*first_order_, order);
      } else if (code == best_code_) {
        record_automorphism(best_order_, order);
      } else if (code > best_code_) {
        best_code_ = std::move(code);
        best_order_ = std::move(order);
      }
      return;
    }

    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
        target = c;
    }

    std::vector<Vertex> explored;
    for (Vertex v : cells[target]) {
      if (!explored.empty()) {
        const auto orbit = orbits_fixing(prefix);
        const bool redundant = std::any_of(explored.begin(), explored.end(),
                                           [&](Vertex w) { return orbit[w] == orbit[v]; });
        if (redundant) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<char> adj_;
  std::optional<std::vector<Vertex>> first_order_;
  std::optional<std::string> first_code_;
  std::vector<Vertex> best_order_;
  std::string best_code_;
  std::vector<std::vector<Vertex>> generators_;
};

}  // namespace

std::string CanonCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonicalLabeling canonical_labeling(const Graph& g) { return CanonSearch(g).run(); }

CanonCode canonical_form(const Graph& g) { return canonical_labeling(g).code; }

Graph canonical_graph(const Graph& g) {
  const auto labeling = canonical_labeling(g);
  std::vector<Vertex> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[labeling.order[i]] = i;
  return g.relabeled(perm);
}

bool are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  return canonical_form(g1) == canonical_form(g2);
}

}  // namespace polyk
