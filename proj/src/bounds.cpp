#include "gdd/bounds.hpp"

#include <algorithm>

namespace gdd {

BoundReport bound_report(const Graph& g, const KnownValues& known, int limit) {
  const auto profile = degree_profile(g);
  if (g.order() == 0) throw std::invalid_argument("empty graph");
  if (profile.a_flag) throw std::invalid_argument("graph has an isolated vertex");

  BoundReport r;
  const int n = g.order();
  r.spherical_lower = (2 * n + profile.max_degree) / (profile.max_degree + 1);
  r.upper = n + 1 - profile.min_degree;
  r.gamma_x2 = known.gamma_x2 ? *known.gamma_x2 : oracle_double_domination(g, limit).value;
  r.gddn = known.gddn ? *known.gddn : oracle_gddn(g, limit).value;
  r.grundy = known.grundy ? *known.grundy : oracle_grundy_domination(g, limit).value;
  r.grundy_lower = r.grundy + 1;
  r.grundy_upper = 2 * r.grundy;
  r.domination_chain_holds =
      r.spherical_lower <= r.gamma_x2 && r.gamma_x2 <= r.gddn && r.gddn <= r.upper;
  r.grundy_chain_holds = r.grundy_lower <= r.gddn && r.gddn <= r.grundy_upper;
  return r;
}

SmallGddn classify_small_gddn(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
  if (is_complete(g)) return SmallGddn::Two;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < n - 2) return SmallGddn::Other;
  return SmallGddn::Three;
}

Sequence rebalance_levels(const Graph& g, Sequence s) {
  if (!footprint(g, s).is_dds) throw InvalidSequence("not a double dominating sequence");
  while (true) {
    const auto levels = split_levels(g, s);
    bool moved = false;
    for (Vertex u : levels.first) {
      const auto p = p_set(g, s, u);
      if (p.size() < 2) continue;
      // Latest member of P_S(u) in the sequence.
      Vertex last = p.front();
      for (Vertex v : p)
        if (std::find(s.begin(), s.end(), v) > std::find(s.begin(), s.end(), last)) last = v;
      s = move_after(s, u, last);
      moved = true;
      break;
    }
    if (!moved) return s;
  }
}

Sequence s1_majority_witness(const Graph& g, int limit) {
  return rebalance_levels(g, oracle_gddn(g, limit).witness);
}

void to_json(nlohmann::json& j, const BoundReport& r) {
  j = {{"spherical_lower", r.spherical_lower},
       {"gamma_x2", r.gamma_x2},
       {"gddn", r.gddn},
       {"upper", r.upper},
       {"grundy", r.grundy},
       {"grundy_lower", r.grundy_lower},
       {"grundy_upper", r.grundy_upper},
       {"domination_chain_holds", r.domination_chain_holds},
       {"grundy_chain_holds", r.grundy_chain_holds}};
}

const char* to_string(SmallGddn c) {
  switch (c) {
    case SmallGddn::Two: return "two";
    case SmallGddn::Three: return "three";
    case SmallGddn::Other: return "other";
  }
  return "other";
}

}  // namespace gdd
