#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "json.hpp"

#include "gdd/decomposition.hpp"
#include "gdd/graph.hpp"

namespace gdd {

enum class Family { Tree, Threshold, Cograph, Spider, QuasiSpider, P4Tidy, ConnectedRandom };

struct GenSpec {
  Family family = Family::Tree;
  int size = 1;
  std::uint64_t seed = 0;
};

/// A generated graph and the recipe that built it, in the graph's ids.
/// The recipe depends on the family: a Prüfer code, a construction order, a
/// cotree, or a spider partition with a nested head recipe.
struct Generated {
  Graph graph;
  nlohmann::json structure;
};

/// Deterministic under spec.seed. Vertex ids are shuffled so nothing
/// downstream can lean on construction order. Throws std::invalid_argument
/// for sizes the family cannot realize (spiders need 4 vertices, quasi 5).
Generated generate(const GenSpec& spec);

/// Spider or quasi-spider over `head`: S = 0..r-1, C = r..2r-1, the quasi
/// twin (if any) is 2r, and the head follows.
struct SpiderInstance {
  Graph graph;
  SpiderPartition partition;
};
SpiderInstance make_spider(SpiderKind kind, int r, QuasiTag quasi, const Graph& head);

const char* to_string(Family f);
std::optional<Family> parse_family(std::string_view name);
std::vector<Family> all_families();

}  // namespace gdd
