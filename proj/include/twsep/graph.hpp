#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twsep/vertex_set.hpp"

namespace twsep {

using Edge = std::pair<Vertex, Vertex>;

struct InducedSubgraph;

// Immutable simple undirected graph on vertices 0..n-1 with sorted
// adjacency lists. Optional labels are carried for I/O only.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::range(num_vertices()); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);
  friend InducedSubgraph induced_subgraph(const Graph& g,
                                          const VertexSet& keep);

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
  std::vector<std::string> labels_;
};

// Throws Error(kSelfLoop | kDuplicateEdge | kVertexOutOfRange) naming the
// offending edge. Duplicates are rejected, never merged.
Graph build_graph(std::size_t n, std::span<const Edge> edges);
inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

struct InducedSubgraph {
  Graph graph;
  // original[new_id] = id in the host graph
  std::vector<Vertex> original;

  Vertex to_original(Vertex v) const { return original[v]; }
  VertexSet to_original(const VertexSet& s) const;
  // Host ids outside the subgraph are dropped.
  VertexSet to_local(const VertexSet& s) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

// Components of G - removed, same ordering as components().
std::vector<VertexSet> components_without(const Graph& g,
                                          const VertexSet& removed);

struct Separation {
  VertexSet a_side;
  VertexSet b_side;

  std::size_t order() const { return intersection_size(a_side, b_side); }
  VertexSet separator() const { return set_intersection(a_side, b_side); }

  friend bool operator==(const Separation&, const Separation&) = default;
};

struct SeparationCheck {
  bool valid = false;
  std::size_t order = 0;
};

SeparationCheck check_separation(const Graph& g, const VertexSet& a,
                                 const VertexSet& b);

// 3|A\B| <= 2n and 3|B\A| <= 2n. Throws kInvalidSeparation.
bool is_balanced(const Graph& g, const Separation& sep);

// 3|(A\B) n W| <= 2|W| and 3|(B\A) n W| <= 2|W|. Throws kInvalidSeparation.
bool is_w_balanced(const Graph& g, const Separation& sep, const VertexSet& w);

}  // namespace twsep
