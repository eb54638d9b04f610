#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gdd/graph.hpp"
#include "gdd/oracle.hpp"
#include "gdd/sequence.hpp"

namespace gdd {

// Rules that grow a longest double neighborhood sequence (MDNS) of G - x into
// one of G. Every sequence here is expressed in the vertex ids of the larger
// graph G, so `sub` never mentions the removed vertex.

enum class LiftRule { Isolated, PendantPlusOne, PendantPlusTwo, UniversalKeep, UniversalAppend };

struct LiftResult {
  int value = 0;
  Sequence sequence;
  LiftRule rule = LiftRule::Isolated;
};

/// v isolated: sub ⊕ (v).
LiftResult lift_isolated(const Graph& g, Vertex v, const Sequence& sub);

/// p pendant with neighbor v, G - p without isolated vertices. With an MDNS of
/// G - p that avoids v the result is that sequence ⊕ (v, p); otherwise sub ⊕ (p).
LiftResult lift_pendant(const Graph& g, Vertex p, const Sequence& sub,
                        const std::optional<Sequence>& sub_avoiding_neighbor = std::nullopt);

/// u universal: sub unchanged when G - u has no isolated vertex, else sub ⊕ (u).
LiftResult lift_universal(const Graph& g, Vertex u, const Sequence& sub);

/// Rule core shared with the threshold solver, which tracks isolation itself.
LiftResult apply_universal(Vertex u, const Sequence& sub, bool rest_has_isolated);

struct TwinInterval {
  int lower = 0;
  int upper = 0;
  bool contains(int value) const noexcept { return lower <= value && value <= upper; }
};

/// [dgri(G - v'), dgri(G - v') + 1] for twins v, v' of the given kind.
TwinInterval twin_interval(const Graph& g, Vertex v, Vertex v_twin, TwinKind kind,
                           int dgri_without_twin);
/// Same, with dgri(G - v') from the oracle.
TwinInterval twin_interval_by_oracle(const Graph& g, Vertex v, Vertex v_twin, TwinKind kind,
                                     int limit = kDefaultOracleLimit);

/// Checks the certificate for the +1 case of a true twin pair: `s` is an MDNS
/// of G - v' (in G's ids) containing v with a nonempty first-time footprint,
/// and every other step keeps something once v's first-time footprint is
/// discounted. On success returns s with v' inserted right after v.
std::optional<Sequence> true_twin_extension(const Graph& g, Vertex v, Vertex v_twin,
                                            const Sequence& s);

/// Necessary condition when a false twin pair raises the value by one: the
/// sequence meets {v, v'}.
bool false_twin_membership(const Sequence& s, Vertex v, Vertex v_twin);

struct Blowup {
  Graph graph;
  /// copies[v] lists the vertices of the blown-up graph standing for v.
  std::vector<std::vector<Vertex>> copies;
  /// origin[x] is the vertex of the base graph that x copies.
  std::vector<Vertex> origin;
};

/// Adds f[v] true twins to each v. Copies of v are consecutive ids.
Blowup blowup_gf(const Graph& g, const std::vector<int>& f);

/// Lifts a legal dominating sequence of G to the paired sequence
/// (v1¹, v1², v2¹, v2², ...) of the blow-up; needs f[v] >= 1 on the sequence.
Sequence pair_lift(const Blowup& b, const Sequence& dominating);

/// dgri(G) - dgri(G - v) via the oracle. G - v must have no isolated vertex.
int deletion_delta(const Graph& g, Vertex v, int limit = kDefaultOracleLimit);

/// Maps a sequence of a subgraph back to parent ids.
Sequence to_parent(const Subgraph& sub, const Sequence& s);

const char* to_string(LiftRule r);

}  // namespace gdd
