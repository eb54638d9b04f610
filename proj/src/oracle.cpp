#include "gdd/oracle.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace gdd {
namespace {

using Mask = std::uint32_t;

void check_limit(const Graph& g, int limit) {
  if (limit < 1 || limit > kOracleHardLimit)
    throw std::invalid_argument("oracle limit must lie in [1, " + std::to_string(kOracleHardLimit) + "]");
  if (g.order() > limit)
    throw SizeLimitError("graph has " + std::to_string(g.order()) + " vertices; oracle limit is " +
                         std::to_string(limit));
}

void check_no_isolated(const Graph& g) {
  if (degree_profile(g).a_flag == 1) throw std::invalid_argument("graph has an isolated vertex");
}

std::vector<Mask> closed_masks(const Graph& g) {
  std::vector<Mask> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = static_cast<Mask>(g.closed_mask(v));
  return out;
}

// Memoized search over played sets. The capped domination counts are a
// function of the played set, so one table entry per set suffices.
class SequenceSearch {
 public:
  static constexpr std::int8_t kUnknown = std::numeric_limits<std::int8_t>::min();
  static constexpr std::int8_t kDeadEnd = -1;

  SequenceSearch(const Graph& g, bool require_double_domination)
      : n_(g.order()),
        full_(n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1),
        closed_(closed_masks(g)),
        require_dd_(require_double_domination),
        memo_(std::size_t{1} << n_, kUnknown) {}

  OracleResult solve() {
    const int best = extend(0);
    OracleResult r;
    if (best < 0) return r;
    r.value = best;
    Mask played = 0;
    while (true) {
      const int v = best_move(played);
      if (v < 0) break;
      r.witness.push_back(v);
      played |= Mask{1} << v;
    }
    return r;
  }

 private:
  void coverage(Mask played, Mask& once, Mask& twice) const {
    once = twice = 0;
    for (Mask p = played; p; p &= p - 1) {
      const Mask nb = closed_[std::countr_zero(p)];
      twice |= once & nb;
      once |= nb;
    }
  }

  // Longest legal continuation from `played`; kDeadEnd when no continuation
  // reaches a double dominating set (only in double-domination mode).
  int extend(Mask played) {
    auto& slot = memo_[played];
    if (slot != kUnknown) return slot;
    Mask once, twice;
    coverage(played, once, twice);
    int best = kDeadEnd;
    if (!require_dd_ || twice == full_) best = 0;
    const Mask open = full_ & ~twice;
    for (int v = 0; v < n_; ++v) {
      const Mask bit = Mask{1} << v;
      if ((played & bit) || !(closed_[v] & open)) continue;
      const int sub = extend(played | bit);
      if (sub >= 0 && sub + 1 > best) best = sub + 1;
    }
    slot = static_cast<std::int8_t>(best);
    return best;
  }

  // Smallest vertex whose move keeps the optimum, or -1 at the end.
  int best_move(Mask played) {
    const int target = extend(played);
    if (target <= 0) return -1;
    Mask once, twice;
    coverage(played, once, twice);
    const Mask open = full_ & ~twice;
    for (int v = 0; v < n_; ++v) {
      const Mask bit = Mask{1} << v;
      if ((played & bit) || !(closed_[v] & open)) continue;
      if (extend(played | bit) == target - 1) return v;
    }
    return -1;
  }

  int n_;
  Mask full_;
  std::vector<Mask> closed_;
  bool require_dd_;
  std::vector<std::int8_t> memo_;
};

// Memoized search over dominated sets for legal dominating sequences.
class GrundySearch {
 public:
  explicit GrundySearch(const Graph& g)
      : n_(g.order()), closed_(closed_masks(g)), memo_(std::size_t{1} << n_, -1) {}

  OracleResult solve() {
    OracleResult r;
    r.value = extend(0);
    Mask dominated = 0;
    while (true) {
      const int target = extend(dominated);
      if (target == 0) break;
      for (int v = 0; v < n_; ++v) {
        if (!(closed_[v] & ~dominated)) continue;
        if (extend(dominated | closed_[v]) == target - 1) {
          r.witness.push_back(v);
          dominated |= closed_[v];
          break;
        }
      }
    }
    return r;
  }

 private:
  int extend(Mask dominated) {
    auto& slot = memo_[dominated];
    if (slot >= 0) return slot;
    int best = 0;
    for (int v = 0; v < n_; ++v)
      if (closed_[v] & ~dominated) best = std::max(best, 1 + extend(dominated | closed_[v]));
    slot = static_cast<std::int8_t>(best);
    return best;
  }

  int n_;
  std::vector<Mask> closed_;
  std::vector<std::int8_t> memo_;
};

}  // namespace

OracleResult oracle_mdns(const Graph& g, int limit) {
  check_limit(g, limit);
  return SequenceSearch(g, false).solve();
}

OracleResult oracle_gddn(const Graph& g, int limit) {
  check_limit(g, limit);
  check_no_isolated(g);
  return SequenceSearch(g, true).solve();
}

OracleResult oracle_grundy_domination(const Graph& g, int limit) {
  check_limit(g, limit);
  return GrundySearch(g).solve();
}

OracleResult oracle_double_domination(const Graph& g, int limit) {
  check_limit(g, limit);
  check_no_isolated(g);
  const int n = g.order();
  const auto closed = closed_masks(g);
  OracleResult r;
  int best = std::numeric_limits<int>::max();
  Mask best_set = 0;
  const Mask end = Mask{1} << n;
  for (Mask d = 0; d < end; ++d) {
    const int size = std::popcount(d);
    if (size >= best) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = std::popcount(closed[v] & d) >= 2;
    if (ok) {
      best = size;
      best_set = d;
    }
  }
  r.value = best;
  for (int v = 0; v < n; ++v)
    if (best_set >> v & 1) r.witness.push_back(v);
  return r;
}

}  // namespace gdd
