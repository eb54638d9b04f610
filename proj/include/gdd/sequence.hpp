#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "gdd/graph.hpp"

namespace gdd {

/// Ordered list of distinct vertices.
using Sequence = std::vector<Vertex>;

class InvalidSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// What one step of a sequence contributes: vertices dominated for the first
/// time (`fresh`) and vertices dominated for the second time (`once`).
struct StepFootprint {
  Vertex vertex = 0;
  std::vector<Vertex> fresh;
  std::vector<Vertex> once;

  bool legal() const noexcept { return !fresh.empty() || !once.empty(); }
};

struct Certificate {
  int n = 0;
  Sequence sequence;
  std::vector<StepFootprint> steps;
  bool is_dns = false;
  bool is_dds = false;
  /// Index of the first step with an empty footprint, if any.
  std::optional<int> first_illegal;
  /// Domination count of each vertex after the whole sequence, capped at 2.
  std::vector<int> counts;
};

/// Replays `s` on `g`. Accepts sequences that are not DNS and records where
/// they break; throws InvalidSequence on repeated or out-of-range entries.
Certificate footprint(const Graph& g, std::span<const Vertex> s);

/// Checks that entries are distinct and inside g.
void check_sequence(const Graph& g, std::span<const Vertex> s);

struct LevelSplit {
  Sequence first;   // steps that dominate some vertex for the first time
  Sequence second;  // the rest
};

LevelSplit split_levels(const Graph& g, std::span<const Vertex> s);

/// Vertices v of the second level whose twice-dominated witnesses were first
/// dominated by u. Requires u in the first level.
std::vector<Vertex> p_set(const Graph& g, std::span<const Vertex> s, Vertex u);

/// Moves u to sit immediately after v; requires u before v.
Sequence move_after(std::span<const Vertex> s, Vertex u, Vertex v);

Sequence concat(std::span<const Vertex> a, std::span<const Vertex> b);

Sequence delete_vertices(std::span<const Vertex> s, std::span<const Vertex> drop);

/// True iff every vertex is closed-dominated at least twice by `set`.
bool double_dominates(const Graph& g, std::span<const Vertex> set);

/// Parses "v1,v2,..." (blanks allowed). Throws InvalidSequence on junk.
Sequence parse_sequence(std::string_view text);

void to_json(nlohmann::json& j, const Certificate& c);

}  // namespace gdd
