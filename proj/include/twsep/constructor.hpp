#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "twsep/decomposition.hpp"
#include "twsep/separations.hpp"

namespace twsep {

using Rational = boost::rational<std::int64_t>;

// h = 4, t = 4h / (1 - (13/6)(2/3)^h) = 3888/139, c = 2t + 1 = 7915/139.
// Threshold tests are integer cross-multiplications by the denominator 139.
struct Constants {
  static constexpr std::int64_t kHeight = 4;
  static constexpr std::int64_t kDen = 139;
  static constexpr std::int64_t kTNum = 3888;
  static constexpr std::int64_t kCNum = 7915;

  static Rational t() { return Rational(kTNum, kDen); }
  static Rational c() { return Rational(kCNum, kDen); }

  // |W| <= t a
  static bool interface_fits(std::size_t w, std::size_t a) {
    return kDen * static_cast<std::int64_t>(w) <= kTNum * static_cast<std::int64_t>(a);
  }
  // n < t a: the single-bag case
  static bool below_base_threshold(std::size_t n, std::size_t a) {
    return kDen * static_cast<std::int64_t>(n) < kTNum * static_cast<std::int64_t>(a);
  }
  // |B| < c a
  static bool bag_within_bound(std::size_t bag, std::size_t a) {
    return kDen * static_cast<std::int64_t>(bag) < kCNum * static_cast<std::int64_t>(a);
  }
  // 139 (width + 1) <= 7915 a with equality excluded; implies width < c a
  static bool width_within_bound(std::int64_t width, std::size_t a) {
    return kDen * (width + 1) < kCNum * static_cast<std::int64_t>(a);
  }
};

enum class Claim { kCellBound, kLeafInterface, kTreewidthBound, kStructural };

std::string_view to_string(Claim claim);

struct ClaimCheck {
  Claim claim;
  std::size_t depth = 0;  // separation-tree depth where applicable
  Rational lhs;
  Rational rhs;
  bool holds = true;
  std::string note;
};

struct RecursionStats {
  std::size_t calls = 0;           // construct invocations, including recursive
  std::size_t base_cases = 0;
  std::size_t max_depth = 0;
  std::size_t oracle_calls = 0;
  std::size_t separation_trees = 0;
  std::size_t max_ell = 0;
};

struct ConstructReport {
  RootedTreeDecomposition decomposition;
  std::size_t a_used = 0;
  std::int64_t width = -1;
  NodeId certificate = 0;  // node whose bag contains the requested W
  RecursionStats stats;
  std::vector<ClaimCheck> assertion_log;
  // construct_theorem2 only: largest interface |X ∩ Y| maintained.
  std::size_t max_interface = 0;

  // (width + 1) / a
  Rational ratio() const;
  Rational bound() const { return Constants::c() * static_cast<std::int64_t>(a_used); }
  std::size_t violations() const;
};

struct ConstructOptions {
  // Check and log the per-node claims (cell bound, leaf interface, bag
  // bound) and the structural facts of each recursion step.
  bool debug_assertions = false;
};

// Tree decomposition of G of width < (7915/139) a with W inside one bag,
// built by induction on |V(G)|: single bag below t a vertices; otherwise a
// W-sequence of width |W| yields a separation (X, Y) with X ∩ Y = Z, G[X] is
// handled recursively with Z as interface, and G[Y] through a separation
// tree of G[W_{ell+1}] restricted to Y whose leaves recurse with their
// boundaries as interfaces.
//
// Requires a >= 1, non-empty W ⊆ V(G), 139 |W| <= 3888 a. Throws
// OracleFailure, kRecursionGuard, kInvalidInput.
ConstructReport construct(const Graph& g, std::size_t a, const VertexSet& w,
                          const BalancedSeparationOracle& oracle,
                          const ConstructOptions& options = {});

// Width < 4a from W-balanced separations of order <= a (exact search, so
// n <= limits.single_graph). Throws WBalancedUnavailable.
ConstructReport construct_theorem2(const Graph& g, std::size_t a,
                                   const ExactLimits& limits = {});

// Smallest a >= max(1, ceil(139 |W| / 3888)) for which construct succeeds.
// Non-certified oracle failures also advance the scan; `certified` in the
// result tells whether every skipped a was refuted exhaustively.
struct FeasibleA {
  ConstructReport report;
  bool certified = true;
};
FeasibleA find_min_feasible_a(const Graph& g, const VertexSet& w,
                              const OracleOptions& oracle_options = {},
                              const ConstructOptions& options = {});

}  // namespace twsep
