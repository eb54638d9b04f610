#include "gdd/sequence.hpp"

#include <algorithm>
#include <charconv>

namespace gdd {

void check_sequence(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : s) {
    if (!g.contains(v)) throw InvalidSequence("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw InvalidSequence("vertex " + std::to_string(v) + " repeated");
    seen[v] = 1;
  }
}

Certificate footprint(const Graph& g, std::span<const Vertex> s) {
  check_sequence(g, s);
  Certificate cert;
  cert.n = g.order();
  cert.sequence.assign(s.begin(), s.end());
  cert.counts.assign(g.order(), 0);
  cert.steps.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    StepFootprint step;
    step.vertex = s[i];
    auto visit = [&](Vertex w) {
      int& c = cert.counts[w];
      if (c == 0)
        step.fresh.push_back(w);
      else if (c == 1)
        step.once.push_back(w);
      c = std::min(c + 1, 2);
    };
    // N[v] in increasing id order.
    bool self_done = false;
    for (Vertex w : g.neighbors(s[i])) {
      if (!self_done && w > s[i]) {
        visit(s[i]);
        self_done = true;
      }
      visit(w);
    }
    if (!self_done) visit(s[i]);
    if (!step.legal() && !cert.first_illegal) cert.first_illegal = static_cast<int>(i);
    cert.steps.push_back(std::move(step));
  }
  cert.is_dns = !cert.first_illegal.has_value();
  cert.is_dds = cert.is_dns && std::all_of(cert.counts.begin(), cert.counts.end(),
                                           [](int c) { return c >= 2; });
  return cert;
}

namespace {

Certificate require_dns(const Graph& g, std::span<const Vertex> s) {
  auto cert = footprint(g, s);
  if (!cert.is_dns)
    throw InvalidSequence("not a double neighborhood sequence (step " +
                          std::to_string(*cert.first_illegal) + " is empty)");
  return cert;
}

std::ptrdiff_t position(std::span<const Vertex> s, Vertex v) {
  auto it = std::find(s.begin(), s.end(), v);
  return it == s.end() ? -1 : it - s.begin();
}

}  // namespace

LevelSplit split_levels(const Graph& g, std::span<const Vertex> s) {
  const auto cert = require_dns(g, s);
  LevelSplit out;
  for (const auto& step : cert.steps) (step.fresh.empty() ? out.second : out.first).push_back(step.vertex);
  return out;
}

std::vector<Vertex> p_set(const Graph& g, std::span<const Vertex> s, Vertex u) {
  const auto cert = require_dns(g, s);
  const auto at = position(s, u);
  if (at < 0 || cert.steps[at].fresh.empty())
    throw InvalidSequence("vertex " + std::to_string(u) + " is not in the first level");
  Bitset first_by_u(g.order());
  for (Vertex w : cert.steps[at].fresh) first_by_u.set(w);
  std::vector<Vertex> out;
  for (std::size_t i = at + 1; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    if (!step.fresh.empty()) continue;
    if (std::any_of(step.once.begin(), step.once.end(), [&](Vertex w) { return first_by_u.test(w); }))
      out.push_back(step.vertex);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Sequence move_after(std::span<const Vertex> s, Vertex u, Vertex v) {
  const auto pu = position(s, u);
  const auto pv = position(s, v);
  if (pu < 0 || pv < 0) throw InvalidSequence("move_after: vertex not in sequence");
  if (pu >= pv) throw InvalidSequence("move_after: u must come before v");
  Sequence out(s.begin(), s.end());
  std::rotate(out.begin() + pu, out.begin() + pu + 1, out.begin() + pv + 1);
  return out;
}

Sequence concat(std::span<const Vertex> a, std::span<const Vertex> b) {
  for (Vertex v : b)
    if (std::find(a.begin(), a.end(), v) != a.end())
      throw InvalidSequence("concat: vertex " + std::to_string(v) + " in both sequences");
  Sequence out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Sequence delete_vertices(std::span<const Vertex> s, std::span<const Vertex> drop) {
  Sequence out;
  for (Vertex v : s)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  return out;
}

bool double_dominates(const Graph& g, std::span<const Vertex> set) {
  std::vector<int> count(g.order(), 0);
  for (Vertex v : set) {
    ++count[v];
    for (Vertex w : g.neighbors(v)) ++count[w];
  }
  return std::all_of(count.begin(), count.end(), [](int c) { return c >= 2; });
}

Sequence parse_sequence(std::string_view text) {
  Sequence out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto token = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\n'))
      token.remove_suffix(1);
    if (token.empty()) {
      if (comma == std::string_view::npos && out.empty()) break;
      throw InvalidSequence("empty entry in sequence");
    }
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw InvalidSequence("bad vertex \"" + std::string(token) + "\"");
    out.push_back(v);
  }
  return out;
}

void to_json(nlohmann::json& j, const Certificate& c) {
  j = nlohmann::json::object();
  j["n"] = c.n;
  j["sequence"] = c.sequence;
  auto steps = nlohmann::json::array();
  for (const auto& s : c.steps) steps.push_back({{"v", s.vertex}, {"new", s.fresh}, {"once", s.once}});
  j["steps"] = std::move(steps);
  j["is_dns"] = c.is_dns;
  j["is_dds"] = c.is_dds;
  if (c.first_illegal) j["first_illegal"] = *c.first_illegal;
}

}  // namespace gdd
