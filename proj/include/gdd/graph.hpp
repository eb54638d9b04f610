#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace gdd {

/// Dense 0-based vertex id.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Raised by parse_edge_list; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Immutable simple undirected graph. Neighbors are kept both as sorted lists
/// and as closed-neighborhood bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Duplicate edges collapse; self-loops and out-of-range ends throw
  /// std::invalid_argument.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const { return u != v && closed_.at(u).test(v); }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  /// N[v] as a bitset of width order().
  const Bitset& closed_neighborhood(Vertex v) const { return closed_.at(v); }
  /// N[v] packed into one word; only valid for order() <= 64.
  std::uint64_t closed_mask(Vertex v) const;

  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bitset> closed_;
  std::size_t edge_count_ = 0;
};

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<Vertex> isolated;
  /// a(G): 1 iff some vertex is isolated.
  int a_flag = 0;
};

struct VertexClass {
  bool isolated = false;
  bool pendant = false;
  bool universal = false;
  /// Set only for pendant vertices.
  std::optional<Vertex> pendant_neighbor;
};

enum class TwinKind { True, False };

struct TwinPair {
  Vertex u;
  Vertex v;
  TwinKind kind;
  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

/// Induced subgraph together with the relabeling in both directions.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // new id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> new id, or -1
};

/// Edge-list text: first non-comment line is n, then one "u v" per line.
/// '#' starts a comment that runs to the end of the line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph complement(const Graph& g);
/// `keep` is taken in the given order: keep[i] becomes vertex i.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> drop);
Subgraph remove_vertex(const Graph& g, Vertex v);

DegreeProfile degree_profile(const Graph& g);
/// Components in order of their smallest vertex; each component sorted.
std::vector<std::vector<Vertex>> components(const Graph& g);
/// Components of the complement, without materializing it.
std::vector<std::vector<Vertex>> co_components(const Graph& g);
bool is_connected(const Graph& g);
std::vector<TwinPair> find_twins(const Graph& g);
std::optional<TwinKind> twin_kind(const Graph& g, Vertex u, Vertex v);
VertexClass classify_vertex(const Graph& g, Vertex v);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
/// True iff some vertex of `part` has no neighbor inside `part`.
bool has_isolated_within(const Graph& g, std::span<const Vertex> part);

// Constructions used across the library and its tests.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int n, int m);
/// b's vertices are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

}  // namespace gdd
