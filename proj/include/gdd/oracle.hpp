#pragma once

#include <stdexcept>

#include "gdd/graph.hpp"
#include "gdd/sequence.hpp"

namespace gdd {

// Exact exponential solvers. All of them memoize over vertex subsets packed
// in a 32-bit word, so the size limit can never exceed kOracleHardLimit.

inline constexpr int kDefaultOracleLimit = 16;
inline constexpr int kOracleHardLimit = 26;

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  int value = 0;
  Sequence witness;
};

/// Longest double neighborhood sequence (dgri).
OracleResult oracle_mdns(const Graph& g, int limit = kDefaultOracleLimit);

/// Longest double dominating sequence; g must have no isolated vertex.
OracleResult oracle_gddn(const Graph& g, int limit = kDefaultOracleLimit);

/// Longest legal dominating sequence (Grundy domination number).
OracleResult oracle_grundy_domination(const Graph& g, int limit = kDefaultOracleLimit);

/// Smallest double dominating set, listed in increasing id order.
OracleResult oracle_double_domination(const Graph& g, int limit = kDefaultOracleLimit);

}  // namespace gdd
