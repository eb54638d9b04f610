#include "gdd/decomposition.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace gdd {
namespace {

std::vector<Vertex> map_to(const std::vector<Vertex>& ids, std::span<const Vertex> table) {
  std::vector<Vertex> out;
  out.reserve(ids.size());
  for (Vertex v : ids) out.push_back(table[v]);
  return out;
}

SpiderPartition map_partition(const SpiderPartition& p, std::span<const Vertex> table) {
  SpiderPartition out = p;
  out.s = map_to(p.s, table);
  out.c = map_to(p.c, table);
  out.h = map_to(p.h, table);
  if (p.twin) out.twin = table[*p.twin];
  return out;
}

// Thin spider with the pendant vertices as S. Every other vertex of a thin
// spider has degree at least two, so S is forced.
std::optional<SpiderPartition> recognize_thin(const Graph& g) {
  const int n = g.order();
  SpiderPartition p;
  p.kind = SpiderKind::Thin;
  std::vector<char> used(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 1) continue;
    const Vertex c = g.neighbors(v).front();
    if (used[c] || g.degree(c) == 1) return std::nullopt;
    used[c] = used[v] = 1;
    p.s.push_back(v);
    p.c.push_back(c);
  }
  for (Vertex v = 0; v < n; ++v)
    if (!used[v]) p.h.push_back(v);
  if (p.weight() < 2 || !is_valid_spider(g, p)) return std::nullopt;
  return p;
}

// Put index i last in both S and C; keeps the matching pattern intact.
void move_index_last(SpiderPartition& p, std::size_t i) {
  const std::size_t last = p.s.size() - 1;
  std::swap(p.s[i], p.s[last]);
  std::swap(p.c[i], p.c[last]);
}

const std::array<Edge, 4> kP5Edges{{{0, 1}, {1, 2}, {2, 3}, {3, 4}}};
const std::array<Edge, 5> kC5Edges{{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}};
const std::array<Edge, 6> kHouseEdges{{{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}}};

class Builder {
 public:
  Builder(const Graph& g, DecomposeOptions opt) : g_(g), opt_(opt) {}

  // Returns the node index, or -1 if some piece is unsupported.
  int build(std::vector<Vertex> part) {
    std::sort(part.begin(), part.end());
    const auto sub = induced_subgraph(g_, part);
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.push_back({});
    tree_.nodes[id].vertices = part;

    if (part.size() == 1) {
      tree_.nodes[id].kind = NodeKind::Leaf;
      return id;
    }
    auto comps = components(sub.graph);
    NodeKind kind = NodeKind::Union;
    if (comps.size() == 1) {
      comps = co_components(sub.graph);
      kind = NodeKind::Join;
    }
    if (comps.size() > 1) {
      tree_.nodes[id].kind = kind;
      for (const auto& comp : comps) {
        const int child = build(map_to(comp, sub.to_parent));
        if (child < 0) return -1;
        tree_.nodes[id].children.push_back(child);
      }
      return id;
    }
    if (opt_.cograph_only) return -1;

    if (auto special = match_special(sub.graph)) {
      auto& node = tree_.nodes[id];
      node.kind = NodeKind::Special;
      node.special = special->kind;
      node.labeling = map_to(special->labeling, sub.to_parent);
      return id;
    }
    auto spider = recognize_spider(sub.graph);
    if (!spider) spider = recognize_quasi_spider(sub.graph);
    if (!spider) return -1;
    auto mapped = map_partition(*spider, sub.to_parent);
    tree_.nodes[id].kind = NodeKind::Spider;
    if (!mapped.h.empty()) {
      const int head = build(mapped.h);
      if (head < 0) return -1;
      tree_.nodes[id].children.push_back(head);
    }
    tree_.nodes[id].spider = std::move(mapped);
    return id;
  }

  DecompTree take() { return std::move(tree_); }

 private:
  const Graph& g_;
  DecomposeOptions opt_;
  DecompTree tree_;
};

}  // namespace

bool is_valid_spider(const Graph& g, const SpiderPartition& p) {
  const int r = p.weight();
  if (static_cast<int>(p.c.size()) != r || r < 2) return false;
  if (p.kind == SpiderKind::Thick && r < 3) return false;
  const bool quasi = p.quasi != QuasiTag::None;
  if (quasi != p.twin.has_value()) return false;

  std::vector<int> role(g.order(), -1);  // 0 = S, 1 = C, 2 = H, 3 = twin
  auto claim = [&](Vertex v, int what) {
    if (!g.contains(v) || role[v] != -1) return false;
    role[v] = what;
    return true;
  };
  for (Vertex v : p.s)
    if (!claim(v, 0)) return false;
  for (Vertex v : p.c)
    if (!claim(v, 1)) return false;
  for (Vertex v : p.h)
    if (!claim(v, 2)) return false;
  if (p.twin && !claim(*p.twin, 3)) return false;
  if (std::count(role.begin(), role.end(), -1) != 0) return false;

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i < j && g.adjacent(p.s[i], p.s[j])) return false;
      if (i < j && !g.adjacent(p.c[i], p.c[j])) return false;
      const bool want = p.kind == SpiderKind::Thin ? i == j : i != j;
      if (g.adjacent(p.s[i], p.c[j]) != want) return false;
    }
  for (Vertex h : p.h) {
    for (Vertex c : p.c)
      if (!g.adjacent(c, h)) return false;
    for (Vertex s : p.s)
      if (g.adjacent(s, h)) return false;
  }
  if (!quasi) return true;

  const bool on_s = p.quasi == QuasiTag::SFalse || p.quasi == QuasiTag::STrue;
  const bool true_twin = p.quasi == QuasiTag::STrue || p.quasi == QuasiTag::CTrue;
  const Vertex base = on_s ? p.s.back() : p.c.back();
  return twin_kind(g, base, *p.twin) == (true_twin ? TwinKind::True : TwinKind::False);
}

std::optional<SpiderPartition> recognize_spider(const Graph& g) {
  if (g.order() < 4) return std::nullopt;
  if (auto thin = recognize_thin(g)) return thin;
  // A thick spider is the complement of a thin one with S and C swapped.
  const Graph co = complement(g);
  auto dual = recognize_thin(co);
  if (!dual || dual->weight() < 3) return std::nullopt;
  SpiderPartition p;
  p.kind = SpiderKind::Thick;
  p.s = dual->c;
  p.c = dual->s;
  p.h = dual->h;
  if (!is_valid_spider(g, p)) return std::nullopt;
  return p;
}

std::optional<SpiderPartition> recognize_quasi_spider(const Graph& g) {
  if (g.order() < 5) return std::nullopt;
  for (const auto& pair : find_twins(g)) {
    for (auto [u, extra] : {std::pair{pair.u, pair.v}, std::pair{pair.v, pair.u}}) {
      const auto sub = remove_vertex(g, extra);
      auto base = recognize_spider(sub.graph);
      if (!base) continue;
      auto p = map_partition(*base, sub.to_parent);
      const bool true_twin = pair.kind == TwinKind::True;
      if (auto it = std::find(p.s.begin(), p.s.end(), u); it != p.s.end()) {
        move_index_last(p, it - p.s.begin());
        p.quasi = true_twin ? QuasiTag::STrue : QuasiTag::SFalse;
      } else if (auto jt = std::find(p.c.begin(), p.c.end(), u); jt != p.c.end()) {
        move_index_last(p, jt - p.c.begin());
        p.quasi = true_twin ? QuasiTag::CTrue : QuasiTag::CFalse;
      } else {
        continue;
      }
      p.twin = extra;
      if (is_valid_spider(g, p)) return p;
    }
  }
  return std::nullopt;
}

Graph special_pattern(SpecialGraph kind) {
  switch (kind) {
    case SpecialGraph::P5: return Graph(5, kP5Edges);
    case SpecialGraph::C5: return Graph(5, kC5Edges);
    case SpecialGraph::House: return Graph(5, kHouseEdges);
  }
  return Graph(5);
}

std::optional<SpecialMatch> match_special(const Graph& g) {
  if (g.order() != 5) return std::nullopt;
  for (SpecialGraph kind : {SpecialGraph::P5, SpecialGraph::House, SpecialGraph::C5}) {
    const Graph pattern = special_pattern(kind);
    if (pattern.size() != g.size()) continue;
    std::vector<Vertex> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (Vertex a = 0; a < 5 && ok; ++a)
        for (Vertex b = a + 1; b < 5 && ok; ++b) ok = pattern.adjacent(a, b) == g.adjacent(perm[a], perm[b]);
      if (ok) return SpecialMatch{kind, perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

std::optional<DecompTree> decompose(const Graph& g, DecomposeOptions options) {
  if (g.order() == 0) return std::nullopt;
  Builder builder(g, options);
  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  if (builder.build(all) < 0) return std::nullopt;
  return builder.take();
}

std::vector<Edge> spider_edges(const SpiderPartition& p) {
  std::vector<Edge> e;
  const int r = p.weight();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i < j) e.emplace_back(p.c[i], p.c[j]);
      if ((p.kind == SpiderKind::Thin) == (i == j)) e.emplace_back(p.s[i], p.c[j]);
    }
  for (Vertex c : p.c)
    for (Vertex h : p.h) e.emplace_back(c, h);
  if (p.twin) {
    const bool on_s = p.quasi == QuasiTag::SFalse || p.quasi == QuasiTag::STrue;
    const Vertex base = on_s ? p.s.back() : p.c.back();
    std::vector<Edge> extra;
    for (auto [a, b] : e) {
      if (a == base) extra.emplace_back(*p.twin, b);
      if (b == base) extra.emplace_back(a, *p.twin);
    }
    if (p.quasi == QuasiTag::STrue || p.quasi == QuasiTag::CTrue) extra.emplace_back(base, *p.twin);
    e.insert(e.end(), extra.begin(), extra.end());
  }
  return e;
}

Graph materialize(const DecompTree& tree, int n) {
  std::vector<Edge> edges;
  for (const auto& node : tree.nodes) {
    switch (node.kind) {
      case NodeKind::Leaf:
      case NodeKind::Union:
        break;
      case NodeKind::Join:
        for (std::size_t a = 0; a < node.children.size(); ++a)
          for (std::size_t b = a + 1; b < node.children.size(); ++b)
            for (Vertex x : tree.nodes[node.children[a]].vertices)
              for (Vertex y : tree.nodes[node.children[b]].vertices) edges.emplace_back(x, y);
        break;
      case NodeKind::Spider: {
        auto e = spider_edges(*node.spider);
        edges.insert(edges.end(), e.begin(), e.end());
        break;
      }
      case NodeKind::Special:
        for (auto [a, b] : special_pattern(node.special).edges())
          edges.emplace_back(node.labeling[a], node.labeling[b]);
        break;
    }
  }
  return Graph(n, edges);
}

const char* to_string(SpiderKind k) { return k == SpiderKind::Thin ? "thin" : "thick"; }

const char* to_string(QuasiTag q) {
  switch (q) {
    case QuasiTag::None: return "none";
    case QuasiTag::SFalse: return "S_f";
    case QuasiTag::STrue: return "S_t";
    case QuasiTag::CFalse: return "C_f";
    case QuasiTag::CTrue: return "C_t";
  }
  return "none";
}

const char* to_string(SpecialGraph s) {
  switch (s) {
    case SpecialGraph::P5: return "P5";
    case SpecialGraph::House: return "house";
    case SpecialGraph::C5: return "C5";
  }
  return "?";
}

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Union: return "union";
    case NodeKind::Join: return "join";
    case NodeKind::Spider: return "spider";
    case NodeKind::Special: return "special";
  }
  return "?";
}

void to_json(nlohmann::json& j, const SpiderPartition& p) {
  j = {{"kind", to_string(p.kind)}, {"r", p.weight()}, {"S", p.s},
       {"C", p.c},                  {"H", p.h},          {"quasi", to_string(p.quasi)}};
  j["twin_vertex"] = p.twin ? nlohmann::json(*p.twin) : nlohmann::json(nullptr);
}

void to_json(nlohmann::json& j, const DecompTree& t) {
  auto nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    nlohmann::json node = {{"id", i}, {"kind", to_string(n.kind)}, {"vertices", n.vertices},
                           {"children", n.children}};
    if (n.spider) node["spider"] = *n.spider;
    if (n.kind == NodeKind::Special) {
      node["special"] = to_string(n.special);
      node["labeling"] = n.labeling;
    }
    nodes.push_back(std::move(node));
  }
  j = {{"supported", true}, {"root", t.root}, {"nodes", std::move(nodes)}};
}

}  // namespace gdd
