#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "polyk/analysis/distance.hpp"
#include "polyk/analysis/independence.hpp"
#include "polyk/analysis/verify.hpp"
#include "polyk/constructions/base_graphs.hpp"
#include "polyk/constructions/builder.hpp"
#include "polyk/constructions/corollary.hpp"
#include "polyk/constructions/formula.hpp"
#include "polyk/constructions/radial.hpp"
#include "polyk/constructions/transforms.hpp"
#include "polyk/core/canon.hpp"
#include "polyk/enumeration/oracles.hpp"
#include "polyk/enumeration/polyhedra.hpp"
#include "polyk/enumeration/triangulations.hpp"
#include "support/oracles.hpp"

using namespace polyk;

namespace {

// Collects failure messages for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 10) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::ostream& log() { return log_; }
  std::string log_text() const { return log_.str(); }
  std::string detail() const {
    std::ostringstream s;
    s << count_ << " failure(s)";
    for (const auto& f : failures_) s << "\n    " << f;
    return s.str();
  }

 private:
  std::vector<std::string> failures_;
  std::ostringstream log_;
  int count_ = 0;
};

std::string str(long long x) { return std::to_string(x); }

void formula_table(Check& c) {
  const long long small[] = {4, 5, 7, 8, 10};
  for (int a = 1; a <= 5; ++a) c.expect(p_formula(1, a) == small[a - 1], "p_" + str(a));
  for (int k = 1; k <= 10; ++k) {
    for (int a = 1; a <= 20; ++a) {
      long long expected;
      if (a == 1) {
        expected = 4;
      } else if (k % 2 == 0) {
        expected = static_cast<long long>(std::llround((1.5 * k + 1.0) * a));
      } else {
        expected = static_cast<long long>(std::ceil(1.5 * a + 2.0)) +
                   static_cast<long long>(std::llround(1.5 * a * (k - 1)));
      }
      c.expect(p_formula(k, a) == expected, "p(" + str(k) + "," + str(a) + ")");
      if (k == 2) c.expect(p_formula(k, a) == 4LL * a, "p(2," + str(a) + ") = 4a");
    }
  }
}

void construction_suite(Check& c) {
  for (int k = 1; k <= 7; ++k) {
    for (int a = 1; a <= 12; ++a) {
      const std::string tag = "(" + str(k) + "," + str(a) + ")";
      try {
        const auto inst = build_extremal(k, a);
        const auto report = verify_certificate(inst.result);
        c.expect(report.polyhedral, tag + " not polyhedral");
        c.expect(report.certificate_valid, tag + " certificate invalid");
        c.expect(inst.result.graph().order() == p_formula(k, a), tag + " wrong order");
      } catch (const std::exception& ex) {
        c.expect(false, tag + " threw: " + ex.what());
      }
    }
  }
}

void lower_bound_oracle(Check& c) {
  struct Row {
    int k, a, n;
    std::size_t graphs;
    int max_alpha;
  };
  for (const Row& row : {Row{1, 3, 6, 7, 2}, Row{1, 4, 7, 34, 3}, Row{1, 5, 9, 2606, 4}}) {
    const auto r = minimality_oracle(row.k, row.a);
    const std::string tag = "(" + str(row.k) + "," + str(row.a) + ")";
    c.expect(r.holds, tag + " bound violated");
    c.expect(!r.levels.empty() && r.levels.back().n == row.n, tag + " top order");
    if (r.levels.empty()) continue;
    const auto& top = r.levels.back();
    c.expect(top.graphs == row.graphs, tag + " scanned " + str(top.graphs));
    c.expect(top.max_value == row.max_alpha, tag + " max alpha " + str(top.max_value));
    c.log() << "    " << tag << ": " << r.summary() << "\n";
  }
  // Independent confirmation of the n = 9 maximum by subset enumeration.
  int brute_max = 0;
  for (const auto& g : enumerate_polyhedra(9).graphs)
    brute_max = std::max(brute_max, testing::brute_k_independence(g, 1));
  c.expect(brute_max == 4, "brute-force max alpha on n=9 is " + str(brute_max));

  const auto r22 = minimality_oracle(2, 2);
  c.expect(r22.holds, "(2,2) bound violated");
  int max_diam = 0;
  for (const auto& level : r22.levels) max_diam = std::max(max_diam, level.max_diameter);
  c.expect(max_diam == 2, "(2,2) max diameter " + str(max_diam));
  c.expect(!r22.levels.empty() && r22.levels.back().n == 7, "(2,2) top order");
  c.log() << "    (2,2): max diameter over n <= 7 is " << max_diam << "\n";
}

void classification(Check& c) {
  const auto four = classify_extremal(4);
  c.expect(four.passed(), "a=4 classification failed");
  c.expect(four.reverse && four.reverse->minimizers == 1, "a=4 minimizer not unique");
  const Graph radial_k4 = radial_graph(base_graph(BaseGraph::Tetrahedron).embedding()).graph();
  c.expect(are_isomorphic(radial_k4, cube_graph()), "radial(K4) is not the cube");
  // Recompute the minimizer directly.
  std::vector<Graph> minimizers;
  int best = 1 << 30;
  for (const auto& g : enumerate_polyhedra(8).graphs) {
    if (static_cast<int>(max_independent_set(g).size()) < 4) continue;
    if (g.size() < best) {
      best = g.size();
      minimizers.clear();
    }
    if (g.size() == best) minimizers.push_back(g);
  }
  c.expect(minimizers.size() == 1 && are_isomorphic(minimizers.front(), cube_graph()),
           "minimum-edge polyhedron with alpha >= 4 on 8 vertices is not the cube alone");
  for (int a : {4, 6, 8, 10, 12}) {
    const auto r = classify_extremal(a, true);
    c.expect(r.forward_ok && !r.forward.empty(), "a=" + str(a) + " forward direction");
    for (const auto& f : r.forward) {
      c.expect(f.order == (3 * a + 1) / 2 + 2, "a=" + str(a) + " order");
      c.expect(f.size == 2 * f.order - 4, "a=" + str(a) + " q != 2p-4");
      c.expect(f.alpha >= a, "a=" + str(a) + " alpha");
      c.expect(!f.separating_quadrilateral, "a=" + str(a) + " separating 4-cycle");
    }
    c.log() << "    a=" << a << ": " << r.forward.size() << " radial graphs checked\n";
  }
}

void odd_quadrangulation(Check& c) {
  for (int a : {3, 5, 7, 9}) {
    const auto r = check_odd_corollary(build_extremal(1, a).result);
    c.expect(r.passed, "a=" + str(a) + ": " + r.message);
    c.log() << "    a=" << a << ": branch " << r.branch << ", " << r.removed_blue_edges
              << " blue-blue edges removed\n";
  }
}

std::vector<int> red_degrees(const ColoredGraph& g) {
  std::vector<int> out;
  for (Vertex r : g.red()) out.push_back(g.graph().degree(r));
  std::sort(out.begin(), out.end());
  return out;
}

void conservation(Check& c) {
  ColoredGraph cur = base_graph(BaseGraph::Cube);
  for (int step = 0; step < 100; ++step) {
    const std::string tag = "P step " + str(step + 1);
    const auto site = find_p_site(cur);
    if (!site) {
      c.expect(false, tag + ": no site");
      break;
    }
    const ColoredGraph next = transform_p(cur, *site);
    c.expect(next.graph().order() - cur.graph().order() == 3, tag + " dp");
    c.expect(next.graph().size() - cur.graph().size() == 6, tag + " dq");
    c.expect(next.embedding().faces().size() - cur.embedding().faces().size() == 3, tag + " dr");
    c.expect(next.red().size() - cur.red().size() == 2, tag + " dred");
    auto expected = red_degrees(cur);
    expected.insert(expected.end(), {3, 3});
    std::sort(expected.begin(), expected.end());
    c.expect(red_degrees(next) == expected, tag + " red degree multiset");
    c.expect(is_polyhedral(next.graph()).polyhedral, tag + " polyhedrality");
    cur = next;
  }
  c.expect(verify_certificate(cur).certificate_valid, "certificate after 100 P steps");

  ColoredGraph q = k4_necklace(3);
  const std::vector<Vertex> reds = q.red();
  for (int round = 0; round < 3; ++round) {
    for (Vertex v : reds) {
      const std::string tag = "Q round " + str(round + 1) + " v=" + str(v);
      const auto before = all_pairs_distances(q.graph());
      const ColoredGraph after = transform_q(q, v);
      const auto d = all_pairs_distances(after.graph());
      for (Vertex u = 0; u < q.graph().order(); ++u)
        if (u != v) c.expect(d(v, u) == before(v, u) + 1, tag + " distance to " + str(u));
      c.expect(after.graph().degree(v) == 3, tag + " degree");
      q = after;
    }
  }
}

void solver_equivalence(Check& c) {
  std::size_t graphs = 0;
  for (int n = 4; n <= 8; ++n) {
    for (const auto& g : enumerate_polyhedra(n).graphs) {
      ++graphs;
      const int brute1 = testing::brute_k_independence(g, 1);
      c.expect(static_cast<int>(max_independent_set(g).size()) == brute1, "MIS mismatch");
      for (int k = 1; k <= 3; ++k)
        c.expect(k_independence_number(g, k) == testing::brute_k_independence(g, k),
                 "k=" + str(k) + " mismatch on n=" + str(n));
    }
  }
  c.log() << "    " << graphs << " polyhedra on n <= 8 compared for k = 1, 2, 3\n";
}

void enumeration_counts(Check& c) {
  const std::size_t tri[] = {1, 1, 2, 5, 14, 50, 233};
  const std::size_t poly[] = {1, 2, 7, 34, 257, 2606};
  std::ostringstream t, p;
  for (int n = 4; n <= 10; ++n) {
    const auto count = enumerate_triangulations(n).size();
    t << (n == 4 ? "" : ",") << count;
    c.expect(count == tri[n - 4], "triangulations n=" + str(n) + ": " + str(count));
  }
  for (int n = 4; n <= 9; ++n) {
    const auto count = enumerate_polyhedra(n).count();
    p << (n == 4 ? "" : ",") << count;
    c.expect(count == poly[n - 4], "polyhedra n=" + str(n) + ": " + str(count));
  }
  auto codes = [](const std::vector<Graph>& gs) {
    std::set<CanonCode> s;
    for (const auto& g : gs) s.insert(canonical_form(g));
    return s;
  };
  for (int n = 4; n <= 6; ++n) {
    c.expect(enumerate_polyhedra(n).codes == codes(testing::brute_polyhedra(n)),
             "brute-force polyhedra differ at n=" + str(n));
    c.expect(enumerate_triangulation_run(n).codes == codes(testing::brute_triangulations(n)),
             "brute-force triangulations differ at n=" + str(n));
  }
  c.log() << "    triangulations n=4..10: " << t.str() << "\n";
  c.log() << "    polyhedra n=4..9: " << p.str() << "\n";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<void(Check&)> body;
  };
  const Criterion criteria[] = {
      {"formula table", 1, formula_table},
      {"construction suite k<=7 a<=12", 30, construction_suite},
      {"lower-bound oracle", 600, lower_bound_oracle},
      {"classification for even a", 300, classification},
      {"odd a quadrangulation check", 5, odd_quadrangulation},
      {"transformation conservation laws", 30, conservation},
      {"solver oracle equivalence", 120, solver_equivalence},
      {"enumeration counts", 0, enumeration_counts},
  };
  int failed = 0;
  int index = 0;
  for (const auto& cr : criteria) {
    ++index;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& ex) {
      check.expect(false, std::string("exception: ") + ex.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs > cr.limit_seconds)
      check.expect(false, "took " + std::to_string(secs) + " s, limit " +
                              std::to_string(cr.limit_seconds) + " s");
    char line[160];
    std::snprintf(line, sizeof line, "criterion %d %-36s %s (%.2f s)", index, cr.name,
                  check.ok() ? "PASS" : "FAIL", secs);
    std::cout << line << "\n" << check.log_text();
    if (!check.ok()) {
      std::cout << "    " << check.detail() << "\n";
      ++failed;
    }
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
