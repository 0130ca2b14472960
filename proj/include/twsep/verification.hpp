#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "twsep/constructor.hpp"
#include "twsep/decomposition.hpp"
#include "twsep/wsequence.hpp"

namespace twsep {

struct TreewidthResult {
  std::int64_t width = -1;  // -1 for the empty graph
  RootedTreeDecomposition witness;
};

// Subset DP over elimination orderings. Throws kSizeLimitExceeded above limit.
TreewidthResult treewidth_exact(const Graph& g, std::size_t limit = 14);

struct ZwCheck {
  bool holds = false;
  Rational lhs;  // |W \ B| + |Z \ B|
  Rational rhs;  // (13/6) |A \ B| / (ell + 2) + 3 |A ∩ B|
  bool weak_holds = false;
  Rational weak_rhs;  // 2 |A \ B| / (ell + 1) + 3 |A ∩ B|
};

// `ab` is a separation of G[W_{ell+1}] given in G's vertex ids. Throws
// kPreconditionFailed when ell = 0, ws is invalid or ab is not a separation.
ZwCheck check_zw_inequality(const Graph& g, const WSequence& ws, const Separation& ab);

// separation_number(G) <= treewidth_exact(G) + 1. Throws kSizeLimitExceeded.
bool check_sep_le_tw(const Graph& g, const ExactLimits& limits = {});

// tw <= floor(7915 sep / 139)
bool within_main_bound(std::int64_t tw, std::size_t sep);

namespace gen {

// Splitmix-seeded generator whose outputs do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

Graph path(std::size_t n);
Graph cycle(std::size_t n);  // n >= 3
Graph complete(std::size_t n);
Graph grid(std::size_t rows, std::size_t cols);
Graph random_tree(std::size_t n, Rng& rng);  // uniform via a Prüfer sequence
Graph gnp(std::size_t n, double p, Rng& rng);
// gnp plus edges joining its components, smallest members in order.
Graph connected_gnp(std::size_t n, double p, Rng& rng);

}  // namespace gen

// One generator family in a suite. `sizes` lists n (or k for k x k grids).
struct FamilyConfig {
  std::string kind;  // path | cycle | tree | grid | complete | gnp
  std::vector<std::size_t> sizes;
  double p = 0.3;
  std::size_t count = 1;  // instances per size (random kinds)
  // "exact" derives a; a positive integer is used as given.
  std::optional<std::size_t> a;
};

struct SuiteConfig {
  std::vector<FamilyConfig> families;
  std::uint64_t seed = 1;
  bool debug_assertions = false;
  ExactLimits limits;
};

struct SuiteRecord {
  std::string id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> sep;
  std::optional<std::int64_t> tw_exact;
  std::size_t a_used = 0;
  std::string a_source;  // separation_number | structural | supplied | scan
  std::int64_t width = -1;
  Rational slack;  // (7915/139) a - (width + 1)
  std::size_t assertions_checked = 0;
  std::size_t assertion_violations = 0;
  double elapsed_ms = 0;
  bool passed = false;
  std::string error;
};

struct SuiteReport {
  std::vector<SuiteRecord> records;
  bool passed() const;
};

SuiteConfig parse_suite_config(const nlohmann::json& j);
SuiteReport run_suite(const SuiteConfig& config);
nlohmann::json to_json(const SuiteReport& report);

}  // namespace twsep
