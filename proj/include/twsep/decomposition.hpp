#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "twsep/graph.hpp"
#include "twsep/separations.hpp"

namespace twsep {

using NodeId = std::size_t;
inline constexpr NodeId kNoParent = std::numeric_limits<NodeId>::max();

// Tree of bags with a designated root; parent[root] == kNoParent. Bags hold
// vertex ids of the host graph (host_n vertices).
struct RootedTreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<NodeId> parent;
  NodeId root = 0;
  std::size_t host_n = 0;

  std::size_t size() const { return bags.size(); }

  friend bool operator==(const RootedTreeDecomposition&,
                         const RootedTreeDecomposition&) = default;
};

// Builds a rooted decomposition from an undirected tree given by edges,
// rooting it at `root`. Children keep the order in which edges were listed.
RootedTreeDecomposition root_tree(std::vector<VertexSet> bags,
                                  const std::vector<std::pair<NodeId, NodeId>>& edges,
                                  NodeId root, std::size_t host_n);

// The following helpers assume a well-formed tree (see validate_decomposition).
std::vector<std::vector<NodeId>> children(const RootedTreeDecomposition& td);
std::vector<std::size_t> depths(const RootedTreeDecomposition& td);
std::vector<NodeId> preorder(const RootedTreeDecomposition& td);
std::size_t height(const RootedTreeDecomposition& td);

struct DecompositionCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

// Tree well-formedness plus the edge-cover and connected-occurrence properties.
DecompositionCheck validate_decomposition(const Graph& g,
                                          const RootedTreeDecomposition& td);

// max bag size - 1; -1 for a single empty bag. Throws kEmptyTree.
std::int64_t width(const RootedTreeDecomposition& td);

struct BoundaryInterior {
  VertexSet boundary;  // bag ∩ parent bag, empty at the root
  VertexSet interior;  // union of subtree bags minus boundary
};

BoundaryInterior boundary_and_interior(const RootedTreeDecomposition& td, NodeId x);
std::vector<BoundaryInterior> all_boundaries_and_interiors(
    const RootedTreeDecomposition& td);

// Same tree with bags (B'_x ∩ Y) ∪ (interior(x) ∩ X ∩ Y). The result is a
// decomposition of G[Y] (bags still in G's ids) whose root bag contains X∩Y.
// Throws kInvalidInput if td_prime or sep is not valid for g.
RootedTreeDecomposition restrict_decomposition(const Graph& g,
                                               const RootedTreeDecomposition& td_prime,
                                               const Separation& sep);

// Re-express bags in the local ids of an induced subgraph (vertices outside
// it are dropped) or back in host ids.
RootedTreeDecomposition to_subgraph_ids(const RootedTreeDecomposition& td,
                                        const InducedSubgraph& sub);
RootedTreeDecomposition to_host_ids(const RootedTreeDecomposition& td,
                                    const InducedSubgraph& sub, std::size_t host_n);

struct SeparationTree {
  RootedTreeDecomposition decomposition;
  // The boundary set handed to the recursive call that created each node.
  std::vector<VertexSet> passed_boundary;
  std::size_t oracle_calls = 0;
  // Largest order among the separations the oracle supplied.
  std::size_t max_order_used = 0;
};

// Recursive balanced-separation decomposition on pairs (G', ∂') starting at
// (G, ∅). A pair with 3^h |V(G') \ ∂'| <= 2^h n becomes a leaf with bag
// V(G'); otherwise a balanced separation (A', B') of G' - ∂' of order <= a
// gives the bag ∂' ∪ (A' ∩ B') and children on G'[A' ∪ ∂'] and G'[B' ∪ ∂'],
// A-side first. Throws OracleFailure (witness in g's ids) when the oracle
// cannot supply a separation, kInvalidInput when h > 40.
SeparationTree separation_tree(const Graph& g, std::size_t a, std::size_t h,
                               const BalancedSeparationOracle& oracle);

}  // namespace twsep
