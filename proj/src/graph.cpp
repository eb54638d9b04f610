#include "gdd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace gdd {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(n, {});
  closed_.assign(n, Bitset(n));
  for (Vertex v = 0; v < n; ++v) closed_[v].set(v);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " out of range");
    if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
    if (closed_[u].test(v)) continue;
    closed_[u].set(v);
    closed_[v].set(u);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::uint64_t Graph::closed_mask(Vertex v) const {
  if (order() > 64) throw std::logic_error("closed_mask needs at most 64 vertices");
  std::uint64_t mask = 0;
  mask |= std::uint64_t{1} << v;
  for (Vertex u : adj_.at(v)) mask |= std::uint64_t{1} << u;
  return mask;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Splits on blanks; returns false if any token is not a plain integer.
bool parse_ints(std::string_view s, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, value);
    if (ec != std::errc{} || ptr != s.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::vector<long long> nums;
  int line_no = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!parse_ints(line, nums)) throw ParseError(line_no, "expected integers");
    if (!n) {
      if (nums.size() != 1 || nums[0] < 0 || nums[0] > 1'000'000)
        throw ParseError(line_no, "expected a single vertex count");
      n = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() != 2) throw ParseError(line_no, "expected \"u v\"");
    if (nums[0] < 0 || nums[1] < 0 || nums[0] >= *n || nums[1] >= *n)
      throw ParseError(line_no, "vertex out of range");
    if (nums[0] == nums[1]) throw ParseError(line_no, "self-loop");
    edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (!n) throw ParseError(line_no, "missing vertex count");
  return Graph(*n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Subgraph sub;
  sub.from_parent.assign(g.order(), -1);
  for (Vertex v : keep) {
    if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    if (sub.from_parent[v] != -1) throw std::invalid_argument("repeated vertex in keep set");
    sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : keep)
    for (Vertex u : g.neighbors(v))
      if (sub.from_parent[u] != -1 && v < u) edges.emplace_back(sub.from_parent[v], sub.from_parent[u]);
  sub.graph = Graph(static_cast<int>(keep.size()), edges);
  return sub;
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : drop) {
    if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    gone[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

Subgraph remove_vertex(const Graph& g, Vertex v) {
  const Vertex drop[] = {v};
  return remove_vertices(g, drop);
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  if (g.order() == 0) return p;
  p.min_degree = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    p.min_degree = std::min(p.min_degree, g.degree(v));
    p.max_degree = std::max(p.max_degree, g.degree(v));
    if (g.degree(v) == 0) p.isolated.push_back(v);
  }
  p.a_flag = p.isolated.empty() ? 0 : 1;
  return p;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex u : g.neighbors(comp[i]))
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<Vertex>> co_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> unvisited(g.order());
  std::iota(unvisited.begin(), unvisited.end(), 0);
  while (!unvisited.empty()) {
    std::vector<Vertex> comp{unvisited.front()};
    unvisited.erase(unvisited.begin());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Vertex v = comp[i];
      std::vector<Vertex> rest;
      for (Vertex u : unvisited) {
        if (g.adjacent(u, v))
          rest.push_back(u);
        else
          comp.push_back(u);
      }
      unvisited = std::move(rest);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

std::optional<TwinKind> twin_kind(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return std::nullopt;
  if (g.adjacent(u, v)) {
    if (g.closed_neighborhood(u) == g.closed_neighborhood(v)) return TwinKind::True;
    return std::nullopt;
  }
  const auto nu = g.neighbors(u);
  const auto nv = g.neighbors(v);
  if (std::equal(nu.begin(), nu.end(), nv.begin(), nv.end())) return TwinKind::False;
  return std::nullopt;
}

std::vector<TwinPair> find_twins(const Graph& g) {
  std::vector<TwinPair> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (auto kind = twin_kind(g, u, v)) out.push_back({u, v, *kind});
  return out;
}

VertexClass classify_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  VertexClass c;
  const int d = g.degree(v);
  c.isolated = d == 0;
  c.universal = d == g.order() - 1;
  c.pendant = d == 1;
  if (c.pendant) c.pendant_neighbor = g.neighbors(v).front();
  return c;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool has_isolated_within(const Graph& g, std::span<const Vertex> part) {
  Bitset in(g.order());
  for (Vertex v : part) in.set(v);
  for (Vertex v : part) {
    bool lonely = true;
    for (Vertex u : g.neighbors(v))
      if (in.test(u)) {
        lonely = false;
        break;
      }
    if (lonely) return true;
  }
  return false;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

Graph complete_bipartite(int n, int m) { return join(empty_graph(n), empty_graph(m)); }

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), e);
}

Graph join(const Graph& a, const Graph& b) {
  auto e = disjoint_union(a, b).edges();
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) e.emplace_back(u, v + a.order());
  return Graph(a.order() + b.order(), e);
}

}  // namespace gdd
