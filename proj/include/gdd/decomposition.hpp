#pragma once

#include <optional>
#include <vector>

#include "json.hpp"

#include "gdd/graph.hpp"

namespace gdd {

enum class SpiderKind { Thin, Thick };

/// Which extra twin turns a spider into a quasi-spider: a false or true twin
/// of s_r (SFalse, STrue) or of c_r (CFalse, CTrue).
enum class QuasiTag { None, SFalse, STrue, CFalse, CTrue };

/// Spider (S, C, H). s[i] and c[i] share the index i; the quasi twin always
/// hangs off the last index.
struct SpiderPartition {
  SpiderKind kind = SpiderKind::Thin;
  std::vector<Vertex> s;
  std::vector<Vertex> c;
  std::vector<Vertex> h;
  QuasiTag quasi = QuasiTag::None;
  std::optional<Vertex> twin;

  int weight() const noexcept { return static_cast<int>(s.size()); }
};

enum class SpecialGraph { P5, House, C5 };

enum class NodeKind { Leaf, Union, Join, Spider, Special };

struct DecompNode {
  NodeKind kind = NodeKind::Leaf;
  /// Vertices spanned by the node, in ambient ids, sorted.
  std::vector<Vertex> vertices;
  /// Union/Join: one child per part. Spider: the head subtree, if any.
  std::vector<int> children;
  std::optional<SpiderPartition> spider;
  SpecialGraph special = SpecialGraph::P5;
  /// Special: labeling[i] is the vertex playing pattern vertex i.
  std::vector<Vertex> labeling;
};

struct DecompTree {
  std::vector<DecompNode> nodes;
  int root = 0;
};

struct DecomposeOptions {
  /// Stop at the first modular piece bigger than one vertex.
  bool cograph_only = false;
};

/// Splits g by components and co-components down to modular pieces and
/// matches those against the P4-tidy catalogue. nullopt when some piece is
/// not recognized.
std::optional<DecompTree> decompose(const Graph& g, DecomposeOptions options = {});

std::optional<SpiderPartition> recognize_spider(const Graph& g);
std::optional<SpiderPartition> recognize_quasi_spider(const Graph& g);

struct SpecialMatch {
  SpecialGraph kind;
  std::vector<Vertex> labeling;
};

/// Five-vertex pattern graphs, on vertices 0..4.
Graph special_pattern(SpecialGraph kind);
std::optional<SpecialMatch> match_special(const Graph& g);

/// Full check of the spider (or quasi-spider) definition against g.
bool is_valid_spider(const Graph& g, const SpiderPartition& p);

/// Rebuilds the graph a tree describes, on `n` ambient vertices.
Graph materialize(const DecompTree& tree, int n);

/// Graph of a spider partition on vertices 0..n-1 (no edges inside the head).
std::vector<Edge> spider_edges(const SpiderPartition& p);

const char* to_string(SpiderKind k);
const char* to_string(QuasiTag q);
const char* to_string(SpecialGraph s);
const char* to_string(NodeKind k);

void to_json(nlohmann::json& j, const SpiderPartition& p);
void to_json(nlohmann::json& j, const DecompTree& t);

}  // namespace gdd
