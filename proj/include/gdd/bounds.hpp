#pragma once

#include <optional>

#include "json.hpp"

#include "gdd/graph.hpp"
#include "gdd/oracle.hpp"
#include "gdd/sequence.hpp"

namespace gdd {

struct BoundReport {
  int spherical_lower = 0;  // ceil(2n / (max degree + 1))
  int gamma_x2 = 0;
  int gddn = 0;
  int upper = 0;  // n + 1 - min degree
  int grundy = 0;
  int grundy_lower = 0;  // grundy + 1
  int grundy_upper = 0;  // 2 * grundy
  bool domination_chain_holds = false;
  bool grundy_chain_holds = false;
};

/// Values the caller already knows; anything missing comes from the oracle.
struct KnownValues {
  std::optional<int> gamma_x2;
  std::optional<int> grundy;
  std::optional<int> gddn;
};

BoundReport bound_report(const Graph& g, const KnownValues& known = {},
                         int limit = kDefaultOracleLimit);

enum class SmallGddn { Two, Three, Other };

/// Two iff complete; Three iff every degree is at least n-2 and g is not
/// complete. Requires g connected with n >= 2.
SmallGddn classify_small_gddn(const Graph& g);

/// A longest double dominating sequence whose first level is at least as
/// long as its second, obtained by rewriting an oracle witness.
Sequence s1_majority_witness(const Graph& g, int limit = kDefaultOracleLimit);

/// Repeatedly moves a first-level vertex u behind the latest member of P_S(u)
/// while some |P_S(u)| >= 2. `s` must be a double dominating sequence.
Sequence rebalance_levels(const Graph& g, Sequence s);

void to_json(nlohmann::json& j, const BoundReport& r);
const char* to_string(SmallGddn c);

}  // namespace gdd
