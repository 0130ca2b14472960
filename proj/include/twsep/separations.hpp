#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "twsep/graph.hpp"

namespace twsep {

// Builds (X, Y) with X = Z plus every component of G - Z that meets S, and
// Y = Z plus the remaining components. Throws kNotSeparated when Z does not
// separate S and T.
Separation stz_separation(const Graph& g, const VertexSet& s, const VertexSet& z,
                          const VertexSet& t);

struct ExactLimits {
  std::size_t single_graph = 20;       // min_*_separation, oracle exact mode
  std::size_t separation_number = 14;  // subset loop of separation_number
};

// Minimum-order balanced separation by exhaustive search over separators in
// order of increasing size, then lexicographically. The components of G - Z
// are assigned greedily (smallest member first) to the A-side whenever a
// balanced completion remains possible.
Separation min_balanced_separation(const Graph& g, const ExactLimits& limits = {});

// Minimum-order separation satisfying is_w_balanced, same tie-break.
Separation min_w_balanced_separation(const Graph& g, const VertexSet& w,
                                     const ExactLimits& limits = {});

// Exhaustive searches bounded by order. nullopt means none of order <= bound.
std::optional<Separation> balanced_separation_up_to(const Graph& g, std::size_t bound);
std::optional<Separation> w_balanced_separation_up_to(const Graph& g,
                                                      const VertexSet& w,
                                                      std::size_t bound);

// max over S of min_balanced_separation(G[S]).order(); n <= limits.separation_number.
std::size_t separation_number(const Graph& g, const ExactLimits& limits = {});

enum class OracleMode { kExact, kHeuristic, kAuto };

struct OracleOptions {
  OracleMode mode = OracleMode::kAuto;
  std::size_t exact_limit = 20;
  // Auto mode stays exhaustive while the number of candidate separators
  // (sum of C(n, k) for k <= bound) is at most this.
  std::uint64_t enumeration_budget = 200'000;
  std::size_t heuristic_rounds = 48;
  std::uint64_t seed = 0x5eed;
};

struct SeparatorOracleOutcome {
  std::optional<Separation> separation;
  // V(G) when no separation was delivered.
  VertexSet witness;
  // True when the answer came from exhaustive search, so a missing
  // separation proves none of the requested order exists.
  bool certified = true;
};

SeparatorOracleOutcome balanced_separation_within(const Graph& g, std::size_t bound,
                                                  const OracleOptions& options = {});

// Callable supplying balanced separations of order <= bound.
using BalancedSeparationOracle =
    std::function<SeparatorOracleOutcome(const Graph&, std::size_t bound)>;

BalancedSeparationOracle make_oracle(const OracleOptions& options = {});

// Number of separator candidates an exhaustive search up to `bound` inspects.
std::uint64_t candidate_count(std::size_t n, std::size_t bound);

}  // namespace twsep
