#include "twsep/graph.hpp"

#include <string>

#include "twsep/error.hpp"

namespace twsep {
namespace {

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

void require_in_range(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.back() >= g.num_vertices()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(s.back()) + " not in a graph with " +
                    std::to_string(g.num_vertices()) + " vertices");
  }
}

}  // namespace

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != num_vertices()) {
    throw Error(ErrorCode::kInvalidInput, "label count does not match vertex count");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (const Edge& e : edges) {
    if (e.first >= n || e.second >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + edge_name(e) + " in a graph with " + std::to_string(n) +
                      " vertices");
    }
    if (e.first == e.second) {
      throw Error(ErrorCode::kSelfLoop, "edge " + edge_name(e));
    }
    g.adjacency_[e.first].push_back(e.second);
    g.adjacency_[e.second].push_back(e.first);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nv = g.adjacency_[v];
    std::sort(nv.begin(), nv.end());
    auto dup = std::adjacent_find(nv.begin(), nv.end());
    if (dup != nv.end()) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "edge " + edge_name({std::min(v, *dup), std::max(v, *dup)}));
    }
  }
  g.num_edges_ = edges.size();
  return g;
}

VertexSet InducedSubgraph::to_original(const VertexSet& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(original[v]);
  return VertexSet(std::move(out));
}

VertexSet InducedSubgraph::to_local(const VertexSet& s) const {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    auto it = std::lower_bound(original.begin(), original.end(), v);
    if (it != original.end() && *it == v) {
      out.push_back(static_cast<Vertex>(it - original.begin()));
    }
  }
  return VertexSet(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  require_in_range(g, keep);
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(g.num_vertices(), kAbsent);
  InducedSubgraph sub;
  sub.original = keep.members();
  for (Vertex i = 0; i < sub.original.size(); ++i) local[sub.original[i]] = i;

  Graph& h = sub.graph;
  h.adjacency_.resize(sub.original.size());
  std::size_t degree_sum = 0;
  for (Vertex i = 0; i < sub.original.size(); ++i) {
    for (Vertex w : g.adjacency_[sub.original[i]]) {
      // Host adjacency is sorted and the map is monotone, so local lists stay sorted.
      if (local[w] != kAbsent) h.adjacency_[i].push_back(local[w]);
    }
    degree_sum += h.adjacency_[i].size();
  }
  h.num_edges_ = degree_sum / 2;
  if (!g.labels_.empty()) {
    for (Vertex v : sub.original) h.labels_.push_back(g.labels_[v]);
  }
  return sub;
}

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
  require_in_range(g, removed);
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  for (Vertex v : removed) seen[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_without(g, {}); }

SeparationCheck check_separation(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_in_range(g, a);
  require_in_range(g, b);
  SeparationCheck result;
  result.order = intersection_size(a, b);
  const std::size_t n = g.num_vertices();
  // 1 = A only, 2 = B only, 3 = both
  std::vector<unsigned char> side(n, 0);
  for (Vertex v : a) side[v] |= 1;
  for (Vertex v : b) side[v] |= 2;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == 0) return result;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if ((side[u] | side[v]) == 3 && (side[u] & side[v]) == 0) return result;
    }
  }
  result.valid = true;
  return result;
}

namespace {

void require_valid(const Graph& g, const Separation& sep) {
  if (!check_separation(g, sep.a_side, sep.b_side).valid) {
    throw Error(ErrorCode::kInvalidSeparation,
                "(" + sep.a_side.to_string() + ", " + sep.b_side.to_string() +
                    ") is not a separation");
  }
}

}  // namespace

bool is_balanced(const Graph& g, const Separation& sep) {
  require_valid(g, sep);
  const std::size_t n = g.num_vertices();
  const std::size_t a_only = set_difference(sep.a_side, sep.b_side).size();
  const std::size_t b_only = set_difference(sep.b_side, sep.a_side).size();
  return 3 * a_only <= 2 * n && 3 * b_only <= 2 * n;
}

bool is_w_balanced(const Graph& g, const Separation& sep, const VertexSet& w) {
  require_valid(g, sep);
  require_in_range(g, w);
  const std::size_t a_only = intersection_size(set_difference(sep.a_side, sep.b_side), w);
  const std::size_t b_only = intersection_size(set_difference(sep.b_side, sep.a_side), w);
  return 3 * a_only <= 2 * w.size() && 3 * b_only <= 2 * w.size();
}

}  // namespace twsep
