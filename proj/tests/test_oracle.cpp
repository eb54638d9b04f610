#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gdd/oracle.hpp"
#include "support.hpp"

using namespace gdd;
using V = std::vector<Vertex>;

namespace {

Graph house() { return complement(path_graph(5)); }

void check_dns_witness(const Graph& g, const OracleResult& r) {
  CHECK(static_cast<int>(r.witness.size()) == r.value);
  CHECK(footprint(g, r.witness).is_dns);
}

}  // namespace

TEST_CASE("oracle_mdns examples") {
  const auto p5 = oracle_mdns(path_graph(5));
  CHECK(p5.value == 5);
  check_dns_witness(path_graph(5), p5);

  const auto c5 = oracle_mdns(cycle_graph(5));
  CHECK(c5.value == 4);
  check_dns_witness(cycle_graph(5), c5);

  const auto e3 = oracle_mdns(empty_graph(3));
  CHECK(e3.value == 3);
  CHECK(e3.witness == V{0, 1, 2});

  CHECK(oracle_mdns(Graph(0)).value == 0);
  CHECK(oracle_mdns(Graph(1)).value == 1);
}

TEST_CASE("oracle_gddn examples") {
  const auto k4 = oracle_gddn(complete_graph(4));
  CHECK(k4.value == 2);
  CHECK(k4.witness == V{0, 1});

  const Graph k32 = complete_bipartite(3, 2);
  const auto b = oracle_gddn(k32);
  CHECK(b.value == 4);
  CHECK(footprint(k32, b.witness).is_dds);

  const auto h = oracle_gddn(house());
  CHECK(h.value == 4);
  CHECK(footprint(house(), h.witness).is_dds);

  CHECK_THROWS_AS(oracle_gddn(empty_graph(2)), std::invalid_argument);
  CHECK_THROWS_AS(oracle_gddn(disjoint_union(complete_graph(2), Graph(1))), std::invalid_argument);
}

TEST_CASE("oracle_grundy_domination examples") {
  for (int n = 1; n <= 6; ++n) CHECK(oracle_grundy_domination(complete_graph(n)).value == 1);
  const auto p4 = oracle_grundy_domination(path_graph(4));
  CHECK(p4.value == 3);
  CHECK(oracle_grundy_domination(empty_graph(3)).value == 3);

  // Every step of the witness newly dominates something.
  std::vector<char> dom(4, 0);
  for (Vertex v : p4.witness) {
    bool fresh = false;
    auto nb = path_graph(4).closed_neighborhood(v);
    for (Vertex w = 0; w < 4; ++w)
      if (nb.test(w) && !dom[w]) fresh = dom[w] = 1;
    CHECK(fresh);
  }
}

TEST_CASE("oracle_double_domination examples") {
  const auto k4 = oracle_double_domination(complete_graph(4));
  CHECK(k4.value == 2);
  CHECK(k4.witness == V{0, 1});
  CHECK(oracle_double_domination(cycle_graph(5)).value == 4);
  const auto star = oracle_double_domination(star_graph(4));
  CHECK(star.value == 5);
  CHECK(double_dominates(star_graph(4), star.witness));
  CHECK_THROWS_AS(oracle_double_domination(empty_graph(2)), std::invalid_argument);
}

TEST_CASE("size limit") {
  CHECK_THROWS_AS(oracle_mdns(path_graph(17)), SizeLimitError);
  CHECK(oracle_mdns(path_graph(17), 17).value == 17);
  CHECK_THROWS_AS(oracle_mdns(path_graph(5), kOracleHardLimit + 1), std::invalid_argument);
  CHECK_THROWS_AS(oracle_grundy_domination(path_graph(17)), SizeLimitError);
  CHECK_THROWS_AS(oracle_double_domination(cycle_graph(17)), SizeLimitError);
}

TEST_CASE("memoized search agrees with plain enumeration") {
  testing::Rng rng(2024);
  for (int it = 0; it < 300; ++it) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const Graph g = testing::random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    const auto mdns = oracle_mdns(g);
    CHECK(mdns.value == testing::naive_mdns(g));
    check_dns_witness(g, mdns);
    CHECK(oracle_grundy_domination(g).value == testing::naive_grundy(g));
    if (degree_profile(g).a_flag == 0) {
      const auto gddn = oracle_gddn(g);
      CHECK(gddn.value == testing::naive_gddn(g));
      CHECK(gddn.value == mdns.value);
      CHECK(footprint(g, gddn.witness).is_dds);
      const auto x2 = oracle_double_domination(g);
      CHECK(x2.value == testing::naive_double_domination(g));
      CHECK(double_dominates(g, x2.witness));
    }
  }
}

TEST_CASE("isolated vertices add one each") {
  testing::Rng rng(7);
  for (int it = 0; it < 100; ++it) {
    const Graph core = testing::random_connected(rng, std::uniform_int_distribution<int>(2, 8)(rng), 0.4);
    const int iso = std::uniform_int_distribution<int>(1, 3)(rng);
    const Graph g = disjoint_union(core, empty_graph(iso));
    const auto r = oracle_mdns(g);
    CHECK(r.value == oracle_gddn(core).value + iso);
    for (Vertex v = core.order(); v < g.order(); ++v)
      CHECK(std::find(r.witness.begin(), r.witness.end(), v) != r.witness.end());
  }
}

TEST_CASE("oracle output is deterministic and prefers small ids") {
  const Graph g = cycle_graph(6);
  const auto a = oracle_gddn(g), b = oracle_gddn(g);
  CHECK(a.witness == b.witness);
  CHECK(a.witness.front() == 0);
}
