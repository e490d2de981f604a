#include "polyk/analysis/verify.hpp"

#include "polyk/analysis/connectivity.hpp"
#include "polyk/analysis/distance.hpp"
#include "polyk/analysis/independence.hpp"
#include "polyk/analysis/planarity.hpp"
#include "polyk/constructions/formula.hpp"

namespace polyk {

Json VerificationReport::to_json() const {
  Json j;
  j["simple"] = simple;
  j["planar"] = planar;
  j["three_connected"] = three_connected;
  j["polyhedral"] = polyhedral;
  j["certificate_valid"] = certificate_valid;
  j["order"] = order;
  j["size"] = size;
  j["k"] = k;
  j["certificate_size"] = certificate_size;
  j["measured_independence"] = measured_independence ? Json(*measured_independence) : Json();
  j["expected_order"] = expected_order ? Json(*expected_order) : Json();
  j["cut_witness"] = cut_witness ? Json(*cut_witness) : Json();
  if (close_pair) {
    j["close_pair"] = {close_pair->first, close_pair->second};
    j["close_pair_distance"] = *close_pair_distance;
  } else {
    j["close_pair"] = nullptr;
    j["close_pair_distance"] = nullptr;
  }
  j["notes"] = notes;
  return j;
}

VerificationReport is_polyhedral(const Graph& g) {
  VerificationReport r;
  r.order = g.order();
  r.size = g.size();
  // Graph construction already rejects loops and collapses parallel pairs.
  r.simple = true;
  if (g.order() < 4) {
    r.notes.push_back("fewer than 4 vertices");
    return r;
  }
  r.planar = is_planar(g).planar;
  if (!r.planar) {
    r.notes.push_back(g.size() > 3 * g.order() - 6 ? "edge count exceeds 3p-6"
                                                   : "rejected by planarity test");
  }
  const auto conn = is_k_connected(g, 3);
  r.three_connected = conn.connected;
  if (!conn.connected) r.cut_witness = conn.cut;
  r.polyhedral = r.simple && r.planar && r.three_connected;
  return r;
}

VerificationReport verify_certificate(const ColoredGraph& c) {
  VerificationReport r = is_polyhedral(c.graph());
  r.k = c.k();
  r.certificate_size = static_cast<int>(c.red().size());
  if (!c.red().empty()) r.expected_order = p_formula(c.k(), static_cast<int>(c.red().size()));

  bool far_apart = true;
  const auto& red = c.red();
  for (std::size_t i = 0; i < red.size() && far_apart; ++i) {
    const auto dist = bfs_distances(c.graph(), red[i]);
    for (std::size_t j = i + 1; j < red.size(); ++j) {
      const int d = dist[red[j]];
      if (d >= 0 && d <= c.k()) {
        far_apart = false;
        r.close_pair = {red[i], red[j]};
        r.close_pair_distance = d;
        r.notes.push_back("red vertices " + std::to_string(red[i]) + " and " +
                          std::to_string(red[j]) + " are at distance " + std::to_string(d) +
                          " <= k = " + std::to_string(c.k()));
        break;
      }
    }
  }
  if (c.graph().order() <= kMaxExactOrder && is_connected(c.graph()))
    r.measured_independence = k_independence_number(c.graph(), c.k());
  r.certificate_valid = r.polyhedral && far_apart;
  return r;
}

ColoredGraph certify(ColoredGraph c) {
  c.certified_ = verify_certificate(c).certificate_valid;
  return c;
}

}  // namespace polyk
