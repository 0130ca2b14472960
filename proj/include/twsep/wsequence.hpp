#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twsep/graph.hpp"
#include "twsep/menger.hpp"

namespace twsep {

// Nested sets W_0 ⊆ ... ⊆ W_{ell+1} grown by disjoint paths towards W, with
// a terminal separator Z of size s_{ell+1} < width.
struct WSequence {
  std::vector<VertexSet> levels;  // W_0 .. W_{ell+1}
  std::size_t width = 0;
  std::size_t ell = 0;
  VertexSet z_set;
  // witness_paths[i]: s_i disjoint Delta_i-W paths inside G[W_i]
  std::vector<std::vector<VertexPath>> witness_paths;

  const VertexSet& w() const { return levels.front(); }
  const VertexSet& last() const { return levels.back(); }
  VertexSet delta(std::size_t i) const;
  std::size_t s(std::size_t i) const { return delta(i).size(); }

  friend bool operator==(const WSequence&, const WSequence&) = default;
};

// Throws kEmptyW, kWidthOutOfRange (w == 0 or w > |W|), kVertexOutOfRange.
WSequence build_w_sequence(const Graph& g, const VertexSet& w, std::size_t width);

struct WSequenceCheck {
  bool ok = true;
  // Tags: "nesting", "a", "b", "c", "d", "e", "paths", "shape"
  std::vector<std::string> violated;

  bool has(const std::string& tag) const;
};

// Re-derives every condition independently of the builder. Condition (a) is
// checked against `expected_w` when given (and W_0 non-empty otherwise).
// Condition (b) covers levels 1..ell; level 0 has s_0 = |W| by definition.
WSequenceCheck validate_w_sequence(const Graph& g, const WSequence& ws,
                                   const std::optional<VertexSet>& expected_w = {});

}  // namespace twsep
