#include "gdd/classgen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace gdd {
namespace {

using Rng = std::mt19937_64;
using nlohmann::json;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Grows a graph vertex by vertex; recipes refer to the raw ids and get
// relabeled once at the end.
class Recipe {
 public:
  explicit Recipe(Rng& rng) : rng_(rng) {}

  Vertex add() { return next_++; }
  void edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  int count() const { return next_; }

  // Cographs: leaves, unions and joins.
  json cograph(int n, std::vector<Vertex>& out) {
    if (n == 1) return leaf(out);
    return split(n, out, [this](int k, std::vector<Vertex>& o) { return cograph(k, o); });
  }

  // The P4-tidy grammar: trivial, P5, house, C5, spiders and quasi-spiders
  // with P4-tidy heads, closed under union and join.
  json p4tidy(int n, std::vector<Vertex>& out) {
    if (n == 1) return leaf(out);
    std::vector<int> options;  // 0 split, 1 special, 2 spider, 3 quasi
    options.push_back(0);
    if (n == 5) options.push_back(1);
    if (n >= 4) options.insert(options.end(), {2, 2});
    if (n >= 5) options.insert(options.end(), {3, 3});
    switch (options[uniform(rng_, 0, static_cast<int>(options.size()) - 1)]) {
      case 1: return special(out);
      case 2: return spider(n, false, out);
      case 3: return spider(n, true, out);
      default:
        return split(n, out, [this](int k, std::vector<Vertex>& o) { return p4tidy(k, o); });
    }
  }

  // Spider on exactly n vertices, head drawn from the P4-tidy grammar.
  json spider(int n, bool quasi, std::vector<Vertex>& out) {
    const int body = n - (quasi ? 1 : 0);
    const bool thick = body >= 6 && coin(rng_);
    const int r = uniform(rng_, thick ? 3 : 2, body / 2);
    const int head_size = body - 2 * r;
    QuasiTag tag = QuasiTag::None;
    if (quasi) {
      const QuasiTag tags[] = {QuasiTag::SFalse, QuasiTag::STrue, QuasiTag::CFalse, QuasiTag::CTrue};
      tag = tags[uniform(rng_, 0, 3)];
    }
    SpiderPartition p;
    p.kind = thick ? SpiderKind::Thick : SpiderKind::Thin;
    p.quasi = tag;
    for (int i = 0; i < r; ++i) p.s.push_back(add());
    for (int i = 0; i < r; ++i) p.c.push_back(add());
    if (quasi) p.twin = add();
    json head = nullptr;
    if (head_size > 0) head = p4tidy(head_size, p.h);
    for (auto [u, v] : spider_edges(p)) edge(u, v);
    out.insert(out.end(), p.s.begin(), p.s.end());
    out.insert(out.end(), p.c.begin(), p.c.end());
    if (p.twin) out.push_back(*p.twin);
    out.insert(out.end(), p.h.begin(), p.h.end());
    json j = p;
    j["node"] = "spider";
    j["head"] = std::move(head);
    return j;
  }

  Graph finish(const std::vector<Vertex>& relabel) const {
    std::vector<Edge> e;
    for (auto [u, v] : edges_) e.emplace_back(relabel[u], relabel[v]);
    return Graph(next_, e);
  }

 private:
  json leaf(std::vector<Vertex>& out) {
    const Vertex v = add();
    out.push_back(v);
    return {{"node", "leaf"}, {"vertex", v}};
  }

  template <class Sub>
  json split(int n, std::vector<Vertex>& out, Sub sub) {
    const bool is_join = coin(rng_);
    const int a = uniform(rng_, 1, n - 1);
    std::vector<Vertex> left, right;
    json l = sub(a, left);
    json r = sub(n - a, right);
    if (is_join)
      for (Vertex x : left)
        for (Vertex y : right) edge(x, y);
    out.insert(out.end(), left.begin(), left.end());
    out.insert(out.end(), right.begin(), right.end());
    return {{"node", is_join ? "join" : "union"}, {"children", json::array({l, r})}};
  }

  json special(std::vector<Vertex>& out) {
    const SpecialGraph kinds[] = {SpecialGraph::P5, SpecialGraph::House, SpecialGraph::C5};
    const SpecialGraph kind = kinds[uniform(rng_, 0, 2)];
    std::vector<Vertex> labeling;
    for (int i = 0; i < 5; ++i) labeling.push_back(add());
    for (auto [a, b] : special_pattern(kind).edges()) edge(labeling[a], labeling[b]);
    out.insert(out.end(), labeling.begin(), labeling.end());
    return {{"node", "special"}, {"special", to_string(kind)}, {"labeling", labeling}};
  }

  Rng& rng_;
  Vertex next_ = 0;
  std::vector<Edge> edges_;
};

// Rewrites every vertex id inside a recipe. Keys holding ids are listed
// explicitly; nothing else in a recipe is an integer vertex.
void relabel_json(json& j, const std::vector<Vertex>& to) {
  static const char* kVertexKeys[] = {"vertex", "S", "C", "H", "twin_vertex", "labeling",
                                      "prufer", "order"};
  if (j.is_array()) {
    for (auto& x : j) relabel_json(x, to);
    return;
  }
  if (!j.is_object()) return;
  for (auto& [key, value] : j.items()) {
    const bool is_vertex_key =
        std::find_if(std::begin(kVertexKeys), std::end(kVertexKeys),
                     [&](const char* k) { return key == k; }) != std::end(kVertexKeys);
    if (is_vertex_key) {
      if (value.is_number_integer())
        value = to.at(value.get<int>());
      else if (value.is_array())
        for (auto& x : value)
          if (x.is_number_integer()) x = to.at(x.get<int>());
    } else {
      relabel_json(value, to);
    }
  }
}

Generated make_tree(int n, Rng& rng, const std::vector<Vertex>& to) {
  std::vector<Edge> e;
  json code = json::array();
  if (n == 2) e.emplace_back(0, 1);
  if (n >= 3) {
    std::vector<int> prufer(n - 2);
    for (auto& x : prufer) x = uniform(rng, 0, n - 1);
    std::vector<int> deg(n, 1);
    for (int x : prufer) ++deg[x];
    for (int x : prufer) {
      int leaf = static_cast<int>(std::find(deg.begin(), deg.end(), 1) - deg.begin());
      e.emplace_back(leaf, x);
      --deg[leaf];
      --deg[x];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) last.push_back(v);
    e.emplace_back(last[0], last[1]);
    code = prufer;
  }
  for (auto& [u, v] : e) u = to[u], v = to[v];
  json s = {{"family", "tree"}, {"prufer", code}};
  relabel_json(s, to);
  return {Graph(n, e), s};
}

Generated make_threshold(int n, Rng& rng, const std::vector<Vertex>& to) {
  std::vector<Edge> e;
  json steps = json::array({{{"vertex", 0}, {"op", "start"}}});
  for (Vertex v = 1; v < n; ++v) {
    const bool universal = coin(rng);
    if (universal)
      for (Vertex u = 0; u < v; ++u) e.emplace_back(u, v);
    steps.push_back({{"vertex", v}, {"op", universal ? "universal" : "isolated"}});
  }
  for (auto& [u, v] : e) u = to[u], v = to[v];
  json s = {{"family", "threshold"}, {"construction", steps}};
  relabel_json(s, to);
  return {Graph(n, e), s};
}

Generated make_connected(int n, Rng& rng, const std::vector<Vertex>& to) {
  const double p = std::uniform_real_distribution<double>(0.25, 0.75)(rng);
  while (true) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng, p)) e.emplace_back(to[u], to[v]);
    Graph g(n, e);
    if (is_connected(g)) return {g, {{"family", "connected_random"}, {"p", p}}};
  }
}

}  // namespace

Generated generate(const GenSpec& spec) {
  const int n = spec.size;
  int min_size = 1;
  if (spec.family == Family::Spider) min_size = 4;
  if (spec.family == Family::QuasiSpider) min_size = 5;
  if (n < min_size || n > 100000)
    throw std::invalid_argument(std::string("size ") + std::to_string(n) + " is not realizable for family " +
                                to_string(spec.family));
  Rng rng(spec.seed);
  std::vector<Vertex> to(n);
  std::iota(to.begin(), to.end(), 0);
  std::shuffle(to.begin(), to.end(), rng);

  switch (spec.family) {
    case Family::Tree: return make_tree(n, rng, to);
    case Family::Threshold: return make_threshold(n, rng, to);
    case Family::ConnectedRandom: return make_connected(n, rng, to);
    default: break;
  }
  Recipe recipe(rng);
  std::vector<Vertex> out;
  json tree;
  switch (spec.family) {
    case Family::Cograph: tree = recipe.cograph(n, out); break;
    case Family::Spider: tree = recipe.spider(n, false, out); break;
    case Family::QuasiSpider: tree = recipe.spider(n, true, out); break;
    default: tree = recipe.p4tidy(n, out); break;
  }
  relabel_json(tree, to);
  return {recipe.finish(to), {{"family", to_string(spec.family)}, {"tree", tree}}};
}

SpiderInstance make_spider(SpiderKind kind, int r, QuasiTag quasi, const Graph& head) {
  if (r < (kind == SpiderKind::Thin ? 2 : 3)) throw std::invalid_argument("spider weight too small");
  SpiderInstance out;
  auto& p = out.partition;
  p.kind = kind;
  p.quasi = quasi;
  Vertex next = 0;
  for (int i = 0; i < r; ++i) p.s.push_back(next++);
  for (int i = 0; i < r; ++i) p.c.push_back(next++);
  if (quasi != QuasiTag::None) p.twin = next++;
  const Vertex head_start = next;
  for (int i = 0; i < head.order(); ++i) p.h.push_back(next++);
  auto e = spider_edges(p);
  for (auto [u, v] : head.edges()) e.emplace_back(u + head_start, v + head_start);
  out.graph = Graph(next, e);
  return out;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::Tree: return "tree";
    case Family::Threshold: return "threshold";
    case Family::Cograph: return "cograph";
    case Family::Spider: return "spider";
    case Family::QuasiSpider: return "quasi_spider";
    case Family::P4Tidy: return "p4tidy";
    case Family::ConnectedRandom: return "connected_random";
  }
  return "?";
}

std::vector<Family> all_families() {
  return {Family::Tree,        Family::Threshold, Family::Cograph,        Family::Spider,
          Family::QuasiSpider, Family::P4Tidy,    Family::ConnectedRandom};
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : all_families())
    if (name == to_string(f)) return f;
  return std::nullopt;
}

}  // namespace gdd
