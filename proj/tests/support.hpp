#pragma once

// Test-only helpers: brute-force references that share no code path with the
// library's memoized searches, random graph sources and small-graph
// enumeration.

#include <cstdint>
#include <random>
#include <vector>

#include "gdd/graph.hpp"
#include "gdd/sequence.hpp"

namespace gdd::testing {

using Rng = std::mt19937_64;

/// Longest double neighborhood sequence by plain exhaustive search.
int naive_mdns(const Graph& g);
/// Longest double dominating sequence by plain exhaustive search; -1 if none.
int naive_gddn(const Graph& g);
/// Longest legal dominating sequence by plain exhaustive search.
int naive_grundy(const Graph& g);
/// Minimum double dominating set size by subset enumeration.
int naive_double_domination(const Graph& g);

Graph random_graph(Rng& rng, int n, double p);
/// Connected, at least two vertices, hence isolated-free.
Graph random_connected(Rng& rng, int n, double p);
/// Random graph with some vertices duplicated as true or false twins.
Graph random_with_twins(Rng& rng, int n);

/// One representative per isomorphism class of graphs on n vertices (n <= 7).
std::vector<Graph> nonisomorphic_graphs(int n);

/// Rebuilds the edge set of `g` relabeled by `perm` (perm[v] = new id).
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace gdd::testing
