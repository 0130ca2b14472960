#include "twsep/separations.hpp"

#include <limits>
#include <random>
#include <tuple>

#include "twsep/error.hpp"
#include "twsep/menger.hpp"

namespace twsep {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// Exhaustive separator search. A candidate separator Z is feasible when the
// components of G - Z can be split into two groups whose weights w satisfy
// 3 * w <= 2 * total.
class SeparatorSearch {
 public:
  SeparatorSearch(const Graph& g, std::vector<std::uint32_t> weight, std::uint64_t total)
      : g_(g),
        weight_(std::move(weight)),
        total_(total),
        cap_(2 * total / 3),
        blocked_(g.num_vertices(), 0),
        component_of_(g.num_vertices(), 0) {}

  // First feasible separator of size in [min_size, max_size], sizes ascending
  // and lexicographic within a size. `budget` counts inspected candidates and
  // is decremented; the search stops (returning nullopt, exhausted = false)
  // once it would go negative.
  std::optional<Separation> run(std::size_t min_size, std::size_t max_size,
                                std::uint64_t* budget, bool* exhausted) {
    const std::size_t n = g_.num_vertices();
    if (exhausted) *exhausted = true;
    max_size = std::min(max_size, n);
    for (std::size_t k = min_size; k <= max_size; ++k) {
      std::vector<Vertex> pick(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
      while (true) {
        if (budget) {
          if (*budget == 0) {
            if (exhausted) *exhausted = false;
            return std::nullopt;
          }
          --*budget;
        }
        if (auto sep = try_separator(pick)) return sep;
        // next k-combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return std::nullopt;
  }

  std::optional<Separation> try_separator(std::span<const Vertex> z) {
    const std::size_t n = g_.num_vertices();
    std::fill(blocked_.begin(), blocked_.end(), 0);
    for (Vertex v : z) blocked_[v] = 1;

    comp_weight_.clear();
    std::uint64_t remaining = 0;
    std::size_t count = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (blocked_[s]) continue;
      std::uint64_t w = 0;
      stack_.assign(1, s);
      blocked_[s] = 2;
      while (!stack_.empty()) {
        Vertex v = stack_.back();
        stack_.pop_back();
        component_of_[v] = static_cast<std::uint32_t>(count);
        w += weight_[v];
        for (Vertex x : g_.neighbors(v)) {
          if (!blocked_[x]) {
            blocked_[x] = 2;
            stack_.push_back(x);
          }
        }
      }
      if (w > cap_) return std::nullopt;
      comp_weight_.push_back(w);
      remaining += w;
      ++count;
    }
    if (remaining > 2 * cap_) return std::nullopt;
    const std::uint64_t lo = remaining > cap_ ? remaining - cap_ : 0;
    const std::uint64_t hi = std::min(cap_, remaining);

    // reach[i][s]: some subset of components i.. has weight s.
    reach_.assign(count + 1, std::vector<char>(remaining + 1, 0));
    reach_[count][0] = 1;
    for (std::size_t i = count; i-- > 0;) {
      const auto& next = reach_[i + 1];
      auto& cur = reach_[i];
      for (std::uint64_t s = 0; s <= remaining; ++s) {
        if (next[s]) {
          cur[s] = 1;
          if (s + comp_weight_[i] <= remaining) cur[s + comp_weight_[i]] = 1;
        }
      }
    }
    auto completes = [&](std::size_t from, std::uint64_t taken) {
      const auto& r = reach_[from];
      for (std::uint64_t s = 0; s <= remaining; ++s) {
        if (r[s] && taken + s >= lo && taken + s <= hi) return true;
      }
      return false;
    };
    if (!completes(0, 0)) return std::nullopt;

    std::vector<char> to_a(count, 0);
    std::uint64_t taken = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (completes(i + 1, taken + comp_weight_[i])) {
        to_a[i] = 1;
        taken += comp_weight_[i];
      }
    }
    std::vector<Vertex> a(z.begin(), z.end()), b(z.begin(), z.end());
    for (Vertex v = 0; v < n; ++v) {
      if (blocked_[v] == 1) continue;
      (to_a[component_of_[v]] ? a : b).push_back(v);
    }
    return Separation{VertexSet(std::move(a)), VertexSet(std::move(b))};
  }

 private:
  const Graph& g_;
  std::vector<std::uint32_t> weight_;
  std::uint64_t total_;
  std::uint64_t cap_;
  std::vector<char> blocked_;
  std::vector<std::uint32_t> component_of_;
  std::vector<std::uint64_t> comp_weight_;
  std::vector<Vertex> stack_;
  std::vector<std::vector<char>> reach_;
};

SeparatorSearch balanced_search(const Graph& g) {
  return SeparatorSearch(g, std::vector<std::uint32_t>(g.num_vertices(), 1),
                         g.num_vertices());
}

SeparatorSearch w_balanced_search(const Graph& g, const VertexSet& w) {
  if (!w.empty() && w.back() >= g.num_vertices()) {
    throw Error(ErrorCode::kVertexOutOfRange, "W = " + w.to_string());
  }
  std::vector<std::uint32_t> weight(g.num_vertices(), 0);
  for (Vertex v : w) weight[v] = 1;
  return SeparatorSearch(g, std::move(weight), w.size());
}

void require_size(const Graph& g, std::size_t limit, const char* what) {
  if (g.num_vertices() > limit) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                std::string(what) + " is limited to " + std::to_string(limit) +
                    " vertices, got " + std::to_string(g.num_vertices()));
  }
}

// Lexicographic (order, separator, A-side).
bool better(const Separation& x, const Separation& y) {
  return std::make_tuple(x.order(), x.separator(), x.a_side) <
         std::make_tuple(y.order(), y.separator(), y.a_side);
}

std::optional<Separation> heuristic_search(const Graph& g, const OracleOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return Separation{};
  std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
  SeparatorSearch search = balanced_search(g);
  std::optional<Separation> best;
  auto consider = [&](const VertexSet& z) {
    auto sep = search.try_separator(z.members());
    if (sep && (!best || better(*sep, *best))) best = std::move(sep);
  };
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  const std::size_t third = std::max<std::size_t>(1, n / 3);
  for (std::size_t round = 0; round < options.heuristic_rounds && n >= 2; ++round) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t q = 1 + round % third;
    if (2 * q > n) continue;
    VertexSet s(std::vector<Vertex>(perm.begin(), perm.begin() + q));
    VertexSet t(std::vector<Vertex>(perm.end() - q, perm.end()));
    PathResult cut = disjoint_paths(g, s, t, n);
    if (cut.separator) consider(*cut.separator);
  }
  // Always-available fallback: a separator of ceil(n/3) vertices.
  consider(VertexSet::range((n + 2) / 3));
  return best;
}

}  // namespace

Separation stz_separation(const Graph& g, const VertexSet& s, const VertexSet& z,
                          const VertexSet& t) {
  if (!separates(g, z, s, t)) {
    throw Error(ErrorCode::kNotSeparated,
                z.to_string() + " does not separate " + s.to_string() + " and " +
                    t.to_string());
  }
  std::vector<Vertex> x(z.begin(), z.end()), y(z.begin(), z.end());
  for (const VertexSet& comp : components_without(g, z)) {
    const bool meets_s = intersection_size(comp, s) > 0;
    auto& side = meets_s ? x : y;
    side.insert(side.end(), comp.begin(), comp.end());
  }
  return Separation{VertexSet(std::move(x)), VertexSet(std::move(y))};
}

std::uint64_t candidate_count(std::size_t n, std::size_t bound) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;  // C(n, k)
  for (std::size_t k = 0; k <= std::min(n, bound); ++k) {
    if (total > kSaturated - c) return kSaturated;
    total += c;
    if (k == n) break;
    // c * (n - k) / (k + 1) without overflow for the sizes we care about
    const unsigned __int128 next = static_cast<unsigned __int128>(c) * (n - k) / (k + 1);
    if (next > kSaturated) return kSaturated;
    c = static_cast<std::uint64_t>(next);
  }
  return total;
}

Separation min_balanced_separation(const Graph& g, const ExactLimits& limits) {
  require_size(g, limits.single_graph, "min_balanced_separation");
  SeparatorSearch search = balanced_search(g);
  return *search.run(0, g.num_vertices(), nullptr, nullptr);
}

Separation min_w_balanced_separation(const Graph& g, const VertexSet& w,
                                     const ExactLimits& limits) {
  require_size(g, limits.single_graph, "min_w_balanced_separation");
  SeparatorSearch search = w_balanced_search(g, w);
  return *search.run(0, g.num_vertices(), nullptr, nullptr);
}

std::optional<Separation> balanced_separation_up_to(const Graph& g, std::size_t bound) {
  SeparatorSearch search = balanced_search(g);
  return search.run(0, bound, nullptr, nullptr);
}

std::optional<Separation> w_balanced_separation_up_to(const Graph& g, const VertexSet& w,
                                                      std::size_t bound) {
  SeparatorSearch search = w_balanced_search(g, w);
  return search.run(0, bound, nullptr, nullptr);
}

std::size_t separation_number(const Graph& g, const ExactLimits& limits) {
  require_size(g, limits.separation_number, "separation_number");
  const std::size_t n = g.num_vertices();
  std::size_t best = 0;
  // Any k-vertex graph has a balanced separation of order ceil(k/3), so only
  // subsets with ceil(k/3) > best can raise the maximum.
  for (std::size_t k = n; k >= 1; --k) {
    if ((k + 2) / 3 <= best) break;
    std::vector<Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      if ((k + 2) / 3 <= best) break;
      InducedSubgraph sub = induced_subgraph(g, VertexSet(pick));
      SeparatorSearch search = balanced_search(sub.graph);
      if (!search.run(0, best, nullptr, nullptr)) {
        best = search.run(best + 1, k, nullptr, nullptr)->order();
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return best;
}

SeparatorOracleOutcome balanced_separation_within(const Graph& g, std::size_t bound,
                                                  const OracleOptions& options) {
  const std::size_t n = g.num_vertices();
  SeparatorOracleOutcome outcome;
  const bool small = n <= options.exact_limit ||
                     candidate_count(n, bound) <= options.enumeration_budget;

  if (options.mode != OracleMode::kHeuristic) {
    if (small) {
      SeparatorSearch search = balanced_search(g);
      outcome.separation = search.run(0, bound, nullptr, nullptr);
      if (!outcome.separation) outcome.witness = g.vertices();
      return outcome;
    }
    if (options.mode == OracleMode::kExact) {
      throw Error(ErrorCode::kSizeLimitExceeded,
                  "exact oracle: " + std::to_string(candidate_count(n, bound)) +
                      " candidate separators on " + std::to_string(n) +
                      " vertices exceeds the budget");
    }
    // Exhaust the cheap sizes first; anything found there is optimal.
    std::uint64_t budget = options.enumeration_budget;
    bool exhausted = false;
    SeparatorSearch search = balanced_search(g);
    if (auto sep = search.run(0, bound, &budget, &exhausted)) {
      outcome.separation = std::move(sep);
      return outcome;
    }
    if (exhausted) {
      outcome.witness = g.vertices();
      return outcome;
    }
  }

  outcome.certified = false;
  auto best = heuristic_search(g, options);
  if (best && best->order() <= bound) {
    outcome.separation = std::move(best);
  } else {
    outcome.witness = g.vertices();
  }
  return outcome;
}

BalancedSeparationOracle make_oracle(const OracleOptions& options) {
  return [options](const Graph& g, std::size_t bound) {
    return balanced_separation_within(g, bound, options);
  };
}

}  // namespace twsep
