#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>

#include "gdd/oracle.hpp"
#include "gdd/reductions.hpp"
#include "support.hpp"

using namespace gdd;
using V = std::vector<Vertex>;

namespace {

// Triangle 0,1,2 with pendant 3 on vertex 2.
Graph paw() {
  const Edge e[] = {{0, 1}, {0, 2}, {1, 2}, {2, 3}};
  return Graph(4, e);
}

void check_lift(const Graph& g, const LiftResult& r) {
  CHECK(static_cast<int>(r.sequence.size()) == r.value);
  CHECK(footprint(g, r.sequence).is_dns);
  CHECK(r.value == oracle_mdns(g).value);
}

}  // namespace

TEST_CASE("lift_isolated") {
  const auto two = lift_isolated(empty_graph(2), 1, V{0});
  CHECK(two.sequence == V{0, 1});
  CHECK(two.value == 2);

  const Graph k2k1 = disjoint_union(complete_graph(2), Graph(1));
  const auto r = lift_isolated(k2k1, 2, oracle_mdns(complete_graph(2)).witness);
  CHECK(r.value == 3);
  check_lift(k2k1, r);

  const auto first = lift_isolated(empty_graph(2), 1, V{0});
  const auto second = lift_isolated(empty_graph(3), 2, first.sequence);
  CHECK(second.value == 3);

  CHECK_THROWS_AS(lift_isolated(path_graph(3), 1, V{0, 2}), std::invalid_argument);
}

TEST_CASE("lift_pendant") {
  // P3 from P2: the only MDNS of P2 uses the neighbor.
  const auto p3 = lift_pendant(path_graph(3), 2, V{0, 1});
  CHECK(p3.value == 3);
  CHECK(p3.rule == LiftRule::PendantPlusOne);
  check_lift(path_graph(3), p3);

  const Graph star = star_graph(3);
  const auto grown = lift_pendant(star, 3, oracle_mdns(star_graph(2)).witness);
  CHECK(grown.value == 4);
  check_lift(star, grown);

  const auto p = lift_pendant(paw(), 3, V{0, 1}, V{0, 1});
  CHECK(p.value == 4);
  CHECK(p.rule == LiftRule::PendantPlusTwo);
  CHECK(p.sequence == V{0, 1, 2, 3});
  check_lift(paw(), p);

  CHECK_THROWS_AS(lift_pendant(cycle_graph(4), 0, V{1, 2, 3}), std::invalid_argument);
  // Removing the pendant of P2 leaves an isolated vertex.
  CHECK_THROWS_AS(lift_pendant(path_graph(2), 1, V{0}), std::invalid_argument);
  // The avoiding sequence must really avoid the neighbor.
  CHECK_THROWS(lift_pendant(paw(), 3, V{0, 1}, V{0, 2}));
}

TEST_CASE("lift_universal") {
  const auto star = lift_universal(star_graph(3), 0, V{1, 2, 3});
  CHECK(star.value == 4);
  CHECK(star.rule == LiftRule::UniversalAppend);
  check_lift(star_graph(3), star);

  const auto k4 = lift_universal(complete_graph(4), 3, oracle_mdns(complete_graph(3)).witness);
  CHECK(k4.value == 2);
  CHECK(k4.rule == LiftRule::UniversalKeep);

  // Wheel: hub 4 over the cycle 0..3.
  const Graph wheel = join(cycle_graph(4), Graph(1));
  const auto w = lift_universal(wheel, 4, oracle_mdns(cycle_graph(4)).witness);
  CHECK(w.value == 3);
  check_lift(wheel, w);

  CHECK_THROWS_AS(lift_universal(path_graph(4), 1, V{0, 2, 3}), std::invalid_argument);
}

TEST_CASE("lifts agree with the oracle on random graphs") {
  testing::Rng rng(41);
  int pendants = 0, universals = 0, plus_two = 0;
  for (int it = 0; it < 400; ++it) {
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    const Graph base = testing::random_connected(rng, n - 1, 0.5);
    std::vector<Edge> e = base.edges();
    const Vertex x = n - 1;
    const bool make_universal = std::bernoulli_distribution(0.4)(rng);
    if (make_universal) {
      for (Vertex v = 0; v < x; ++v) e.emplace_back(v, x);
    } else {
      e.emplace_back(std::uniform_int_distribution<int>(0, x - 1)(rng), x);
    }
    const Graph g(n, e);
    const auto sub = oracle_mdns(base);
    if (make_universal) {
      check_lift(g, lift_universal(g, x, sub.witness));
      ++universals;
      continue;
    }
    // Search every MDNS of G - p for one avoiding the neighbor.
    const Vertex nb = g.neighbors(x)[0];
    std::optional<Sequence> avoiding;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < x; ++v)
      if (v != nb) rest.push_back(v);
    if (x <= 7) {
      std::function<void(Sequence&, std::vector<char>&)> go = [&](Sequence& s, std::vector<char>& used) {
        if (avoiding) return;
        if (static_cast<int>(s.size()) == sub.value) {
          avoiding = s;
          return;
        }
        for (Vertex v : rest) {
          if (used[v]) continue;
          s.push_back(v);
          if (footprint(base, s).is_dns) {
            used[v] = 1;
            go(s, used);
            used[v] = 0;
          }
          s.pop_back();
        }
      };
      Sequence s;
      std::vector<char> used(x, 0);
      go(s, used);
      const auto r = lift_pendant(g, x, sub.witness, avoiding);
      check_lift(g, r);
      plus_two += r.rule == LiftRule::PendantPlusTwo;
      ++pendants;
    }
  }
  CHECK(pendants > 50);
  CHECK(universals > 50);
  CHECK(plus_two > 0);
}

TEST_CASE("twin_interval examples") {
  const auto k3 = twin_interval_by_oracle(complete_graph(3), 0, 1, TwinKind::True);
  CHECK(k3.lower == 2);
  CHECK(k3.upper == 3);
  CHECK(k3.contains(oracle_mdns(complete_graph(3)).value));
  CHECK(oracle_mdns(complete_graph(3)).value == 2);

  const auto c4 = twin_interval_by_oracle(cycle_graph(4), 0, 2, TwinKind::False);
  CHECK(c4.lower == 3);
  CHECK(c4.upper == 4);
  CHECK(oracle_mdns(cycle_graph(4)).value == 3);

  // P4 as a thin spider s0-c0-c1-s1, plus a false twin 4 of s1.
  const Edge e[] = {{0, 1}, {1, 2}, {2, 3}, {2, 4}};
  const Graph quasi(5, e);
  const auto q = twin_interval_by_oracle(quasi, 3, 4, TwinKind::False);
  CHECK(q.lower == 4);
  CHECK(q.upper == 5);
  CHECK(oracle_mdns(quasi).value == 5);

  CHECK_THROWS_AS(twin_interval(cycle_graph(4), 0, 2, TwinKind::True, 3), std::invalid_argument);
  CHECK_THROWS_AS(twin_interval(path_graph(4), 0, 1, TwinKind::True, 3), std::invalid_argument);
}

TEST_CASE("twin intervals and their certificates on random graphs") {
  testing::Rng rng(12);
  int true_pairs = 0, false_pairs = 0, raised = 0, certified = 0;
  for (int it = 0; it < 120; ++it) {
    const Graph g = testing::random_with_twins(rng, std::uniform_int_distribution<int>(3, 10)(rng));
    const int value = oracle_mdns(g).value;
    for (const auto& t : find_twins(g)) {
      const auto without = oracle_mdns(remove_vertex(g, t.v).graph);
      const auto iv = twin_interval(g, t.u, t.v, t.kind, without.value);
      CHECK(iv.contains(value));
      (t.kind == TwinKind::True ? true_pairs : false_pairs)++;
      if (value == iv.upper) {
        ++raised;
        if (t.kind == TwinKind::False) {
          // Any MDNS of G meets the pair {v, v'}.
          CHECK(false_twin_membership(oracle_mdns(g).witness, t.u, t.v));
        }
      }
      if (t.kind == TwinKind::True) {
        const auto lifted = true_twin_extension(g, t.u, t.v, to_parent(remove_vertex(g, t.v), without.witness));
        if (lifted) {
          ++certified;
          CHECK(footprint(g, *lifted).is_dns);
          CHECK(static_cast<int>(lifted->size()) == value);
          CHECK(value == iv.upper);
        }
      }
    }
  }
  CHECK(true_pairs > 20);
  CHECK(false_pairs > 20);
  CHECK(raised > 0);
  CHECK(certified > 0);
}

TEST_CASE("false_twin_membership") {
  CHECK(false_twin_membership(V{0, 1}, 1, 5));
  CHECK(false_twin_membership(V{0, 5}, 1, 5));
  CHECK(!false_twin_membership(V{0, 2}, 1, 5));
}

TEST_CASE("true_twin_extension") {
  // Diamond: 2 and 3 are true twins over the non-adjacent pair 0, 1. The
  // value stays at 3, so no certificate may exist.
  const Graph diamond = join(empty_graph(2), complete_graph(2));
  REQUIRE(twin_kind(diamond, 2, 3) == TwinKind::True);
  CHECK(!true_twin_extension(diamond, 2, 3, V{0, 1, 2}));
  CHECK(!true_twin_extension(diamond, 2, 3, V{0, 3}));

  // K2 plus a true twin of 1 is K3, stuck at 2.
  CHECK(!true_twin_extension(complete_graph(3), 1, 2, V{0, 1}));

  // Pendant path 0-1-2 with a true twin 3 of 2 (adjacent to 1 and 2).
  const Edge e[] = {{0, 1}, {1, 2}, {1, 3}, {2, 3}};
  const Graph g(4, e);
  REQUIRE(twin_kind(g, 2, 3) == TwinKind::True);
  const auto lifted = true_twin_extension(g, 2, 3, V{2, 1, 0});
  if (lifted) {
    CHECK(*lifted == V{2, 3, 1, 0});
    CHECK(footprint(g, *lifted).is_dns);
  }
  CHECK(lifted.has_value() == (oracle_mdns(g).value == 4));
  CHECK_THROWS_AS(true_twin_extension(g, 0, 1, V{}), std::invalid_argument);
}

TEST_CASE("blowup_gf examples") {
  const auto k2 = blowup_gf(complete_graph(2), {1, 1});
  CHECK(k2.graph == complete_graph(4));
  CHECK(k2.copies == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
  CHECK(k2.origin == V{0, 0, 1, 1});

  const Graph c5 = cycle_graph(5);
  CHECK(blowup_gf(c5, std::vector<int>(5, 0)).graph == c5);

  const auto p3 = blowup_gf(path_graph(3), {1, 1, 1});
  CHECK(p3.graph.order() == 6);
  CHECK(oracle_gddn(p3.graph).value == 4);
  CHECK(2 * oracle_grundy_domination(path_graph(3)).value == 4);

  CHECK_THROWS_AS(blowup_gf(path_graph(3), {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(blowup_gf(path_graph(3), {1, -1, 1}), std::invalid_argument);
}

TEST_CASE("blow-up identity needs at least one copy per vertex") {
  // With no copies added the blow-up is the graph itself, and P3 has
  // GDDN 3 while twice its Grundy number is 4.
  const Graph p3 = path_graph(3);
  CHECK(oracle_gddn(blowup_gf(p3, {0, 0, 0}).graph).value == 3);
  CHECK(2 * oracle_grundy_domination(p3).value == 4);
}

TEST_CASE("blow-up identity on random graphs") {
  testing::Rng rng(77);
  for (int it = 0; it < 40; ++it) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const Graph g = testing::random_graph(rng, n, 0.5);
    std::vector<int> f(n);
    for (auto& k : f) k = std::uniform_int_distribution<int>(1, 2)(rng);
    const auto b = blowup_gf(g, f);
    const auto grundy = oracle_grundy_domination(g);
    CHECK(oracle_gddn(b.graph).value == 2 * grundy.value);
    const auto paired = pair_lift(b, grundy.witness);
    CHECK(footprint(b.graph, paired).is_dds);
    CHECK(paired.size() == 2 * grundy.witness.size());
  }
}

TEST_CASE("deletion_delta examples") {
  CHECK(deletion_delta(path_graph(5), 0) == 1);
  CHECK(deletion_delta(paw(), 3) == 2);

  // Three triangles, each with one vertex joined to a hub.
  std::vector<Edge> e;
  for (int t = 0; t < 3; ++t) {
    const int b = 3 * t;
    e.insert(e.end(), {{b, b + 1}, {b, b + 2}, {b + 1, b + 2}, {b, 9}});
  }
  const Graph hub(10, e);
  CHECK(deletion_delta(hub, 9) == 3);

  CHECK(deletion_delta(complete_graph(4), 0) == 0);
  CHECK_THROWS_AS(deletion_delta(path_graph(3), 1), std::invalid_argument);
}

TEST_CASE("deletion delta stays within [0, 3]") {
  testing::Rng rng(100);
  for (int it = 0; it < 80; ++it) {
    const Graph g = testing::random_graph(rng, std::uniform_int_distribution<int>(2, 10)(rng), 0.45);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto rest = remove_vertex(g, v).graph;
      if (degree_profile(rest).a_flag) continue;
      const int d = deletion_delta(g, v);
      CHECK(d >= 0);
      CHECK(d <= 3);
    }
  }
}
