#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace gdd::testing {
namespace {

// Plain DFS over every sequence of distinct vertices, counting domination
// with an uncapped integer array.
struct Enumerator {
  const Graph& g;
  std::vector<int> count;
  std::vector<char> used;

  explicit Enumerator(const Graph& graph)
      : g(graph), count(graph.order(), 0), used(graph.order(), 0) {}

  std::vector<Vertex> closed(Vertex v) const {
    std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
    out.push_back(v);
    return out;
  }

  bool double_dominated() const {
    return std::all_of(count.begin(), count.end(), [](int c) { return c >= 2; });
  }

  // Visits every DNS; `score` maps the current state to a candidate value.
  int search(int depth, const std::function<int(int)>& score) {
    int best = score(depth);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (used[v]) continue;
      const auto nb = closed(v);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return count[w] <= 1; })) continue;
      used[v] = 1;
      for (Vertex w : nb) ++count[w];
      best = std::max(best, search(depth + 1, score));
      for (Vertex w : nb) --count[w];
      used[v] = 0;
    }
    return best;
  }
};

}  // namespace

int naive_mdns(const Graph& g) {
  Enumerator e(g);
  return e.search(0, [](int depth) { return depth; });
}

int naive_gddn(const Graph& g) {
  Enumerator e(g);
  return e.search(0, [&e](int depth) { return e.double_dominated() ? depth : -1; });
}

int naive_grundy(const Graph& g) {
  std::vector<char> dominated(g.order(), 0), used(g.order(), 0);
  std::function<int()> go = [&]() {
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (used[v]) continue;
      std::vector<Vertex> fresh;
      if (!dominated[v]) fresh.push_back(v);
      for (Vertex u : g.neighbors(v))
        if (!dominated[u]) fresh.push_back(u);
      if (fresh.empty()) continue;
      used[v] = 1;
      for (Vertex u : fresh) dominated[u] = 1;
      best = std::max(best, 1 + go());
      for (Vertex u : fresh) dominated[u] = 0;
      used[v] = 0;
    }
    return best;
  };
  return go();
}

int naive_double_domination(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      int c = (mask >> v) & 1;
      for (Vertex u : g.neighbors(v)) c += (mask >> u) & 1;
      ok = c >= 2;
    }
    if (ok) best = std::min(best, static_cast<int>(__builtin_popcount(mask)));
  }
  return best;
}

Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph random_connected(Rng& rng, int n, double p) {
  while (true) {
    Graph g = random_graph(rng, n, p);
    if (n >= 2 && is_connected(g)) return g;
  }
}

Graph random_with_twins(Rng& rng, int n) {
  const int base_n = std::max(2, n / 2 + 1);
  Graph base = random_graph(rng, base_n, 0.45);
  std::vector<Edge> e = base.edges();
  std::vector<std::vector<Vertex>> nb(base_n);
  for (Vertex v = 0; v < base_n; ++v) nb[v].assign(base.neighbors(v).begin(), base.neighbors(v).end());
  int next = base_n;
  std::uniform_int_distribution<int> pick(0, base_n - 1);
  while (next < n) {
    const Vertex original = pick(rng);
    const bool true_twin = std::bernoulli_distribution(0.5)(rng);
    for (Vertex u : nb[original]) e.emplace_back(next, u);
    if (true_twin) e.emplace_back(next, original);
    ++next;
  }
  return Graph(n, e);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), e);
}

namespace {

// Adjacency bits of g under `order` (order[i] = vertex placed at position i).
std::uint32_t encode(const Graph& g, const std::vector<Vertex>& order) {
  std::uint32_t code = 0;
  int bit = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j, ++bit)
      if (g.adjacent(order[i], order[j])) code |= 1u << bit;
  return code;
}

// Minimum code over orders that list vertices by nondecreasing degree; any
// isomorphism preserves degrees, so this is a canonical form.
std::uint32_t canonical_code(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<std::pair<int, int>> blocks;  // [begin, end) runs of equal degree
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = ~0u;
  std::function<void(std::size_t)> go = [&](std::size_t b) {
    if (b == blocks.size()) {
      best = std::min(best, encode(g, order));
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      go(b + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  go(0);
  return best;
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("nonisomorphic_graphs supports 1..7");
  std::vector<Graph> reps{Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::set<std::uint32_t> seen;
    std::vector<Graph> next;
    for (const auto& base : reps) {
      for (std::uint32_t mask = 0; mask < (1u << (size - 1)); ++mask) {
        auto e = base.edges();
        for (Vertex v = 0; v < size - 1; ++v)
          if (mask >> v & 1) e.emplace_back(v, size - 1);
        Graph g(size, e);
        if (seen.insert(canonical_code(g)).second) next.push_back(std::move(g));
      }
    }
    reps = std::move(next);
  }
  return reps;
}

}  // namespace gdd::testing
