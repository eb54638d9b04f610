#include "gdd/solvers.hpp"

#include <algorithm>

#include "gdd/reductions.hpp"

namespace gdd {
namespace {

SolveResult make_result(Sequence s, Method m) {
  SolveResult r;
  r.value = static_cast<int>(s.size());
  r.sequence = std::move(s);
  r.method = m;
  return r;
}

void append(Sequence& out, std::span<const Vertex> tail) { out.insert(out.end(), tail.begin(), tail.end()); }

// Prefix of s (or c) without the last index.
std::span<const Vertex> all_but_last(const std::vector<Vertex>& v) {
  return std::span<const Vertex>(v).first(v.size() - 1);
}

}  // namespace

SolveResult mdns_union(const SolveResult& a, const SolveResult& b) {
  auto r = make_result(concat(a.sequence, b.sequence), a.method);
  if (r.value != a.value + b.value) throw std::logic_error("union: sequence lengths disagree with values");
  return r;
}

SolveResult mdns_join(const Part& a, const Part& b, const Graph& joined) {
  if (a.vertices.empty() || b.vertices.empty()) throw std::invalid_argument("join of an empty part");
  for (Vertex x : a.vertices)
    for (Vertex y : b.vertices)
      if (!joined.adjacent(x, y))
        throw std::invalid_argument("graph is not the join of the given parts");

  const int score_a = a.result.value + (a.has_isolated ? 1 : 0);
  const int score_b = b.result.value + (b.has_isolated ? 1 : 0);
  const bool a_wins = score_a >= score_b;
  const Part& win = a_wins ? a : b;
  const Part& other = a_wins ? b : a;
  Sequence s = win.result.sequence;
  if (win.has_isolated) s.push_back(*std::min_element(other.vertices.begin(), other.vertices.end()));
  return make_result(std::move(s), a.result.method);
}

SolveResult mdns_spider(const SpiderPartition& p, const SolveResult& head) {
  if (p.quasi != QuasiTag::None) throw std::invalid_argument("quasi-spider passed to mdns_spider");
  if (p.weight() < 2 || p.c.size() != p.s.size()) throw std::invalid_argument("invalid spider partition");
  Sequence s = head.sequence;
  if (p.kind == SpiderKind::Thin) {
    append(s, p.c);
    append(s, p.s);
  } else {
    if (p.weight() < 3) throw std::invalid_argument("thick spider needs weight >= 3");
    append(s, p.s);
    s.push_back(p.c[0]);
    s.push_back(p.c[1]);
  }
  return make_result(std::move(s), head.method);
}

SolveResult mdns_quasi_spider(const SpiderPartition& p, const SolveResult& head,
                              bool head_has_isolated) {
  if (p.quasi == QuasiTag::None || !p.twin) throw std::invalid_argument("not a quasi-spider partition");
  if (p.weight() < 2 || p.c.size() != p.s.size()) throw std::invalid_argument("invalid spider partition");
  const Vertex twin = *p.twin;
  const Vertex s_r = p.s.back();
  const Vertex c_r = p.c.back();
  const bool head_empty = p.h.empty();
  const bool on_s = p.quasi == QuasiTag::SFalse || p.quasi == QuasiTag::STrue;

  Sequence s = head.sequence;
  if (p.kind == SpiderKind::Thick) {
    if (p.weight() < 3) throw std::invalid_argument("thick spider needs weight >= 3");
    append(s, p.s);
    if (on_s) s.push_back(twin);
    s.push_back(p.c[0]);
    s.push_back(p.c[1]);
    return make_result(std::move(s), head.method);
  }

  if (p.quasi == QuasiTag::SFalse) {
    append(s, p.c);
    append(s, p.s);
    s.push_back(twin);
  } else if (p.quasi == QuasiTag::STrue && (head_empty || head_has_isolated)) {
    s.insert(s.end(), {s_r, twin, c_r});
    append(s, all_but_last(p.c));
    append(s, all_but_last(p.s));
  } else if (!on_s && head_empty) {
    s = {s_r, c_r, twin};
    append(s, all_but_last(p.c));
    append(s, all_but_last(p.s));
  } else {
    // S_t over a head without isolated vertices, or C_f / C_t over a head.
    append(s, p.c);
    append(s, p.s);
  }
  return make_result(std::move(s), head.method);
}

Sequence special_witness(SpecialGraph kind) {
  switch (kind) {
    case SpecialGraph::P5: return {0, 1, 2, 3, 4};
    case SpecialGraph::C5: return {0, 2, 4, 1};
    case SpecialGraph::House: return {0, 1, 2, 3};
  }
  return {};
}

SolveResult solve_oracle(const Graph& g, int limit) {
  auto r = oracle_mdns(g, limit);
  return make_result(std::move(r.witness), Method::Oracle);
}

SolveResult solve_tree(const Graph& g) {
  if (!is_tree(g)) throw std::invalid_argument("graph is not a tree");
  Sequence order{0};
  std::vector<char> seen(g.order(), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex u : g.neighbors(order[i]))
      if (!seen[u]) {
        seen[u] = 1;
        order.push_back(u);
      }
  return make_result(std::move(order), Method::Tree);
}

std::optional<SolveResult> solve_threshold(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  enum class Op { Isolated, Universal };
  struct Peel {
    Vertex v;
    Op op;
    bool rest_has_isolated;
  };
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> alive(n, 1);
  std::vector<Peel> peeled;
  int remaining = n;
  while (remaining > 1) {
    Vertex pick = -1;
    Op op = Op::Isolated;
    for (Vertex v = 0; v < n && pick < 0; ++v) {
      if (!alive[v]) continue;
      if (deg[v] == 0) pick = v, op = Op::Isolated;
      else if (deg[v] == remaining - 1) pick = v, op = Op::Universal;
    }
    if (pick < 0) return std::nullopt;
    alive[pick] = 0;
    --remaining;
    for (Vertex u : g.neighbors(pick))
      if (alive[u]) --deg[u];
    bool rest_isolated = false;
    for (Vertex v = 0; v < n; ++v) rest_isolated |= alive[v] && deg[v] == 0;
    peeled.push_back({pick, op, rest_isolated});
  }
  const Vertex base = static_cast<Vertex>(std::find(alive.begin(), alive.end(), 1) - alive.begin());
  Sequence s{base};
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    if (it->op == Op::Isolated)
      s.push_back(it->v);
    else
      s = apply_universal(it->v, s, it->rest_has_isolated).sequence;
  }
  return make_result(std::move(s), Method::Threshold);
}

namespace {

SolveResult evaluate(const Graph& g, const DecompTree& tree, int id, Method tag) {
  const auto& node = tree.nodes.at(id);
  switch (node.kind) {
    case NodeKind::Leaf:
      return make_result({node.vertices.front()}, tag);
    case NodeKind::Union: {
      SolveResult acc = make_result({}, tag);
      for (int child : node.children) acc = mdns_union(acc, evaluate(g, tree, child, tag));
      return acc;
    }
    case NodeKind::Join: {
      Part acc;
      bool first = true;
      for (int child : node.children) {
        Part next;
        next.result = evaluate(g, tree, child, tag);
        next.vertices = tree.nodes[child].vertices;
        next.has_isolated = has_isolated_within(g, next.vertices);
        if (first) {
          acc = std::move(next);
          first = false;
          continue;
        }
        acc.result = mdns_join(acc, next, g);
        acc.vertices.insert(acc.vertices.end(), next.vertices.begin(), next.vertices.end());
        acc.has_isolated = false;
      }
      return acc.result;
    }
    case NodeKind::Spider: {
      const auto& p = *node.spider;
      SolveResult head = make_result({}, tag);
      if (!node.children.empty()) head = evaluate(g, tree, node.children.front(), tag);
      if (p.quasi == QuasiTag::None) return mdns_spider(p, head);
      return mdns_quasi_spider(p, head, !p.h.empty() && has_isolated_within(g, p.h));
    }
    case NodeKind::Special: {
      Sequence s;
      for (Vertex x : special_witness(node.special)) s.push_back(node.labeling.at(x));
      return make_result(std::move(s), tag);
    }
  }
  throw std::logic_error("unknown node kind");
}

}  // namespace

SolveResult solve_tree_decomposition(const Graph& g, const DecompTree& tree, Method tag) {
  return evaluate(g, tree, tree.root, tag);
}

std::optional<SolveResult> solve_cograph(const Graph& g) {
  auto tree = decompose(g, {.cograph_only = true});
  if (!tree) return std::nullopt;
  return solve_tree_decomposition(g, *tree, Method::Cograph);
}

std::optional<SolveResult> solve_p4tidy(const Graph& g) {
  auto tree = decompose(g);
  if (!tree) return std::nullopt;
  return solve_tree_decomposition(g, *tree, Method::P4Tidy);
}

SolveResult solve_auto(const Graph& g, int limit) {
  if (g.order() == 0) return make_result({}, Method::Auto);
  if (is_tree(g)) return solve_tree(g);
  if (auto r = solve_threshold(g)) return *r;
  if (auto r = solve_cograph(g)) return *r;
  if (auto r = solve_p4tidy(g)) return *r;
  if (g.order() <= limit) return solve_oracle(g, limit);
  throw UnsupportedGraph("graph is not P4-tidy and has " + std::to_string(g.order()) +
                         " vertices, above the oracle limit " + std::to_string(limit));
}

std::optional<SolveResult> solve_with(const Graph& g, Method m, int limit) {
  switch (m) {
    case Method::Oracle: return solve_oracle(g, limit);
    case Method::Tree:
      if (!is_tree(g)) return std::nullopt;
      return solve_tree(g);
    case Method::Threshold: return solve_threshold(g);
    case Method::Cograph: return solve_cograph(g);
    case Method::P4Tidy: return solve_p4tidy(g);
    case Method::Auto: return solve_auto(g, limit);
  }
  return std::nullopt;
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Tree: return "tree";
    case Method::Threshold: return "threshold";
    case Method::Cograph: return "cograph";
    case Method::P4Tidy: return "p4tidy";
    case Method::Auto: return "auto";
  }
  return "auto";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::Oracle, Method::Tree, Method::Threshold, Method::Cograph, Method::P4Tidy,
                   Method::Auto})
    if (name == to_string(m)) return m;
  return std::nullopt;
}

nlohmann::json solve_result_json(const Graph& g, const SolveResult& r) {
  return {{"value", r.value}, {"method", to_string(r.method)}, {"certificate", footprint(g, r.sequence)}};
}

}  // namespace gdd
