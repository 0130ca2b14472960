#pragma once

#include <optional>
#include <vector>

#include "twsep/graph.hpp"

namespace twsep {

// Ordered vertex list; a single vertex is a path of length 0.
using VertexPath = std::vector<Vertex>;

struct PathResult {
  std::vector<VertexPath> paths;
  // Present exactly when fewer than `cap` paths exist. Then its size equals
  // paths.size(), it contains S n T, and G minus it has no S-T path.
  std::optional<VertexSet> separator;
};

// Up to `cap` pairwise vertex-disjoint S-T paths. Vertices of S n T come
// first as length-0 paths; the rest are found by unit-capacity augmenting
// paths on the vertex-split network, so the output is deterministic. Each
// returned path meets S only at its first vertex and T only at its last.
PathResult disjoint_paths(const Graph& g, const VertexSet& s, const VertexSet& t,
                          std::size_t cap);

// True iff every S-T path in G meets Z.
bool separates(const Graph& g, const VertexSet& z, const VertexSet& s,
               const VertexSet& t);

// Structural check: consecutive vertices adjacent, no repeats, non-empty.
bool is_path(const Graph& g, const VertexPath& path);

}  // namespace twsep
