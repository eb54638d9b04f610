#include "gdd/reductions.hpp"

#include <algorithm>

namespace gdd {
namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool contains(const Sequence& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); }

}  // namespace

Sequence to_parent(const Subgraph& sub, const Sequence& s) {
  Sequence out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(sub.to_parent.at(v));
  return out;
}

LiftResult lift_isolated(const Graph& g, Vertex v, const Sequence& sub) {
  require_vertex(g, v);
  if (g.degree(v) != 0) throw std::invalid_argument("vertex " + std::to_string(v) + " is not isolated");
  const Vertex tail[] = {v};
  LiftResult r{0, concat(sub, tail), LiftRule::Isolated};
  r.value = static_cast<int>(r.sequence.size());
  return r;
}

LiftResult lift_pendant(const Graph& g, Vertex p, const Sequence& sub,
                        const std::optional<Sequence>& sub_avoiding_neighbor) {
  require_vertex(g, p);
  const auto cls = classify_vertex(g, p);
  if (!cls.pendant) throw std::invalid_argument("vertex " + std::to_string(p) + " is not pendant");
  const Vertex v = *cls.pendant_neighbor;
  if (degree_profile(remove_vertex(g, p).graph).a_flag)
    throw std::invalid_argument("removing the pendant vertex leaves an isolated vertex");
  if (contains(sub, p)) throw InvalidSequence("sub mentions the pendant vertex");

  LiftResult r;
  if (sub_avoiding_neighbor) {
    if (contains(*sub_avoiding_neighbor, v))
      throw InvalidSequence("sequence supplied as avoiding the neighbor contains it");
    if (sub_avoiding_neighbor->size() != sub.size())
      throw InvalidSequence("both sequences must be longest, so of equal length");
    const Vertex tail[] = {v, p};
    r.sequence = concat(*sub_avoiding_neighbor, tail);
    r.rule = LiftRule::PendantPlusTwo;
  } else {
    const Vertex tail[] = {p};
    r.sequence = concat(sub, tail);
    r.rule = LiftRule::PendantPlusOne;
  }
  r.value = static_cast<int>(r.sequence.size());
  return r;
}

LiftResult apply_universal(Vertex u, const Sequence& sub, bool rest_has_isolated) {
  LiftResult r;
  if (rest_has_isolated) {
    const Vertex tail[] = {u};
    r.sequence = concat(sub, tail);
    r.rule = LiftRule::UniversalAppend;
  } else {
    r.sequence = sub;
    r.rule = LiftRule::UniversalKeep;
  }
  r.value = static_cast<int>(r.sequence.size());
  return r;
}

LiftResult lift_universal(const Graph& g, Vertex u, const Sequence& sub) {
  require_vertex(g, u);
  if (g.order() < 2) throw std::invalid_argument("universal rule needs at least two vertices");
  if (!classify_vertex(g, u).universal)
    throw std::invalid_argument("vertex " + std::to_string(u) + " is not universal");
  if (contains(sub, u)) throw InvalidSequence("sub mentions the universal vertex");
  const bool rest_isolated = degree_profile(remove_vertex(g, u).graph).a_flag == 1;
  return apply_universal(u, sub, rest_isolated);
}

TwinInterval twin_interval(const Graph& g, Vertex v, Vertex v_twin, TwinKind kind,
                           int dgri_without_twin) {
  require_vertex(g, v);
  require_vertex(g, v_twin);
  if (twin_kind(g, v, v_twin) != kind)
    throw std::invalid_argument("vertices are not twins of the stated kind");
  return {dgri_without_twin, dgri_without_twin + 1};
}

TwinInterval twin_interval_by_oracle(const Graph& g, Vertex v, Vertex v_twin, TwinKind kind, int limit) {
  require_vertex(g, v_twin);
  const int without = oracle_mdns(remove_vertex(g, v_twin).graph, limit).value;
  return twin_interval(g, v, v_twin, kind, without);
}

std::optional<Sequence> true_twin_extension(const Graph& g, Vertex v, Vertex v_twin,
                                            const Sequence& s) {
  if (twin_kind(g, v, v_twin) != TwinKind::True)
    throw std::invalid_argument("vertices are not true twins");
  if (contains(s, v_twin)) return std::nullopt;
  const auto sub = remove_vertex(g, v_twin);
  Sequence local;
  for (Vertex x : s) local.push_back(sub.from_parent.at(x));
  const auto cert = footprint(sub.graph, local);
  if (!cert.is_dns) return std::nullopt;

  const Vertex v_local = sub.from_parent[v];
  const auto at = std::find(local.begin(), local.end(), v_local) - local.begin();
  if (at == static_cast<std::ptrdiff_t>(local.size())) return std::nullopt;
  const auto& fresh_v = cert.steps[at].fresh;
  if (fresh_v.empty()) return std::nullopt;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    if (static_cast<std::ptrdiff_t>(i) == at) continue;
    const auto& step = cert.steps[i];
    auto outside = [&](Vertex w) { return std::find(fresh_v.begin(), fresh_v.end(), w) == fresh_v.end(); };
    if (std::none_of(step.fresh.begin(), step.fresh.end(), outside) &&
        std::none_of(step.once.begin(), step.once.end(), outside))
      return std::nullopt;
  }
  Sequence out = s;
  out.insert(out.begin() + at + 1, v_twin);
  return out;
}

bool false_twin_membership(const Sequence& s, Vertex v, Vertex v_twin) {
  return contains(s, v) || contains(s, v_twin);
}

Blowup blowup_gf(const Graph& g, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != g.order())
    throw std::invalid_argument("blow-up needs one multiplicity per vertex");
  Blowup b;
  b.copies.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] < 0) throw std::invalid_argument("negative multiplicity");
    for (int i = 0; i <= f[v]; ++i) {
      b.copies[v].push_back(static_cast<Vertex>(b.origin.size()));
      b.origin.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& cv = b.copies[v];
    for (std::size_t i = 0; i < cv.size(); ++i)
      for (std::size_t j = i + 1; j < cv.size(); ++j) edges.emplace_back(cv[i], cv[j]);
    for (Vertex u : g.neighbors(v))
      if (v < u)
        for (Vertex x : cv)
          for (Vertex y : b.copies[u]) edges.emplace_back(x, y);
  }
  b.graph = Graph(static_cast<int>(b.origin.size()), edges);
  return b;
}

Sequence pair_lift(const Blowup& b, const Sequence& dominating) {
  Sequence out;
  for (Vertex v : dominating) {
    const auto& cv = b.copies.at(v);
    if (cv.size() < 2) throw std::invalid_argument("vertex " + std::to_string(v) + " has no twin copy");
    out.push_back(cv[0]);
    out.push_back(cv[1]);
  }
  return out;
}

int deletion_delta(const Graph& g, Vertex v, int limit) {
  require_vertex(g, v);
  const auto rest = remove_vertex(g, v);
  if (rest.graph.order() == 0 || degree_profile(rest.graph).a_flag)
    throw std::invalid_argument("G - v must be nonempty without isolated vertices");
  return oracle_mdns(g, limit).value - oracle_mdns(rest.graph, limit).value;
}

const char* to_string(LiftRule r) {
  switch (r) {
    case LiftRule::Isolated: return "isolated";
    case LiftRule::PendantPlusOne: return "pendant+1";
    case LiftRule::PendantPlusTwo: return "pendant+2";
    case LiftRule::UniversalKeep: return "universal+0";
    case LiftRule::UniversalAppend: return "universal+1";
  }
  return "?";
}

}  // namespace gdd
