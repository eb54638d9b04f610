#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "json.hpp"

#include "gdd/decomposition.hpp"
#include "gdd/graph.hpp"
#include "gdd/oracle.hpp"
#include "gdd/sequence.hpp"

namespace gdd {

enum class Method { Oracle, Tree, Threshold, Cograph, P4Tidy, Auto };

/// dgri(G) together with a witness sequence in G's ids.
struct SolveResult {
  int value = 0;
  Sequence sequence;
  Method method = Method::Auto;
};

class UnsupportedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One side of a union or join: its solution, its vertices in the joined
/// graph, and whether it has an isolated vertex of its own.
struct Part {
  SolveResult result;
  std::vector<Vertex> vertices;
  bool has_isolated = false;
};

SolveResult mdns_union(const SolveResult& a, const SolveResult& b);

/// Join rule: the side with the larger dgri + a wins (ties go to `a`); one
/// vertex of the other side is appended when the winner has an isolated
/// vertex. `joined` is checked to be the join of the two parts.
SolveResult mdns_join(const Part& a, const Part& b, const Graph& joined);

/// Spider without quasi twin. `head` solves G[H] (empty result if H is empty).
SolveResult mdns_spider(const SpiderPartition& p, const SolveResult& head);

/// Quasi-spider case table; `head_has_isolated` is a(G[H]).
SolveResult mdns_quasi_spider(const SpiderPartition& p, const SolveResult& head,
                              bool head_has_isolated);

/// Witness for the five-vertex special pieces, in pattern ids 0..4.
Sequence special_witness(SpecialGraph kind);

SolveResult solve_oracle(const Graph& g, int limit = kDefaultOracleLimit);
/// Root 0, breadth-first level order. Throws std::invalid_argument off trees.
SolveResult solve_tree(const Graph& g);
std::optional<SolveResult> solve_threshold(const Graph& g);
std::optional<SolveResult> solve_cograph(const Graph& g);
std::optional<SolveResult> solve_p4tidy(const Graph& g);
/// Evaluates an existing decomposition of g bottom-up.
SolveResult solve_tree_decomposition(const Graph& g, const DecompTree& tree, Method tag);

/// Tree, threshold, cograph, P4-tidy, then the oracle if g is small enough.
/// Throws UnsupportedGraph otherwise.
SolveResult solve_auto(const Graph& g, int limit = kDefaultOracleLimit);

/// Dispatch by method; nullopt when a structural method does not apply.
std::optional<SolveResult> solve_with(const Graph& g, Method m, int limit = kDefaultOracleLimit);

const char* to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

/// {"value", "method", "certificate"}; needs the graph for the certificate.
nlohmann::json solve_result_json(const Graph& g, const SolveResult& r);

}  // namespace gdd
