#include "twsep/menger.hpp"

#include <deque>
#include <limits>

#include "twsep/error.hpp"

namespace twsep {
namespace {

void require_in_range(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.back() >= g.num_vertices()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(s.back()) + " not in a graph with " +
                    std::to_string(g.num_vertices()) + " vertices");
  }
}

// Unit vertex capacities via in/out splitting: in(v) = 2v, out(v) = 2v + 1.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, const std::vector<char>& blocked,
               const std::vector<char>& is_source, const std::vector<char>& is_sink)
      : n_(g.num_vertices()), adj_(2 * n_ + 2) {
    const int big = static_cast<int>(n_) + 1;
    for (Vertex v = 0; v < n_; ++v) {
      if (blocked[v]) continue;
      if (is_source[v]) add_edge(source(), in(v), big);
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (blocked[v]) continue;
      add_edge(in(v), out(v), 1);
      for (Vertex w : g.neighbors(v)) {
        if (!blocked[w]) add_edge(out(v), in(w), big);
      }
      if (is_sink[v]) add_edge(out(v), sink(), big);
    }
  }

  std::size_t source() const { return 2 * n_; }
  std::size_t sink() const { return 2 * n_ + 1; }
  static std::size_t in(Vertex v) { return 2 * static_cast<std::size_t>(v); }
  static std::size_t out(Vertex v) { return 2 * static_cast<std::size_t>(v) + 1; }

  // One unit along a shortest residual path; false if none exists.
  bool augment() {
    std::vector<int> via(adj_.size(), -1);
    std::vector<char> seen(adj_.size(), 0);
    std::deque<std::size_t> queue{source()};
    seen[source()] = 1;
    while (!queue.empty() && !seen[sink()]) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (int id : adj_[x]) {
        const Arc& arc = arcs_[id];
        if (arc.residual > 0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          via[arc.to] = id;
          queue.push_back(arc.to);
        }
      }
    }
    if (!seen[sink()]) return false;
    for (std::size_t x = sink(); x != source();) {
      Arc& arc = arcs_[via[x]];
      arc.residual -= 1;
      arcs_[via[x] ^ 1].residual += 1;
      x = arcs_[via[x] ^ 1].to;
    }
    return true;
  }

  std::vector<char> residual_reachable() const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> stack{source()};
    seen[source()] = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (int id : adj_[x]) {
        if (arcs_[id].residual > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = 1;
          stack.push_back(arcs_[id].to);
        }
      }
    }
    return seen;
  }

  // Follows one unit of flow from `start` (an in-node carrying flow) to the sink.
  VertexPath trace(Vertex start) {
    VertexPath path;
    std::size_t x = in(start);
    while (x != sink()) {
      if (x % 2 == 0) {
        path.push_back(static_cast<Vertex>(x / 2));
        x = out(static_cast<Vertex>(x / 2));
        continue;
      }
      std::size_t next = sink();
      for (int id : adj_[x]) {
        Arc& arc = arcs_[id];
        if (id % 2 == 0 && arc.flow() > 0) {
          arc.residual += 1;
          arcs_[id ^ 1].residual -= 1;
          next = arc.to;
          break;
        }
      }
      x = next;
    }
    return path;
  }

  int source_flow(Vertex v) const {
    for (int id : adj_[source()]) {
      if (arcs_[id].to == in(v)) return arcs_[id].flow();
    }
    return 0;
  }

 private:
  struct Arc {
    std::size_t to;
    int capacity;
    int residual;
    int flow() const { return capacity - residual; }
  };

  void add_edge(std::size_t from, std::size_t to, int capacity) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, capacity, capacity});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, 0});
  }

  std::size_t n_;
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

PathResult disjoint_paths(const Graph& g, const VertexSet& s, const VertexSet& t,
                          std::size_t cap) {
  require_in_range(g, s);
  require_in_range(g, t);
  PathResult result;
  const VertexSet common = set_intersection(s, t);
  for (Vertex v : common) {
    if (result.paths.size() == cap) return result;
    result.paths.push_back({v});
  }
  if (result.paths.size() == cap) return result;

  const std::size_t n = g.num_vertices();
  std::vector<char> blocked(n, 0), is_source(n, 0), is_sink(n, 0);
  for (Vertex v : common) blocked[v] = 1;
  for (Vertex v : s) is_source[v] = 1;
  for (Vertex v : t) is_sink[v] = 1;

  SplitNetwork net(g, blocked, is_source, is_sink);
  std::size_t flow = 0;
  const std::size_t wanted = cap - result.paths.size();
  while (flow < wanted && net.augment()) ++flow;

  if (flow < wanted) {
    const std::vector<char> reach = net.residual_reachable();
    std::vector<Vertex> cut(common.begin(), common.end());
    for (Vertex v = 0; v < n; ++v) {
      if (!blocked[v] && reach[SplitNetwork::in(v)] && !reach[SplitNetwork::out(v)]) {
        cut.push_back(v);
      }
    }
    result.separator = VertexSet(std::move(cut));
  }

  for (Vertex v : s) {
    if (blocked[v] || net.source_flow(v) <= 0) continue;
    VertexPath raw = net.trace(v);
    // Trim to the last S-vertex and then the first T-vertex after it.
    std::size_t first = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (is_source[raw[i]]) first = i;
    }
    std::size_t last = first;
    while (!is_sink[raw[last]]) ++last;
    result.paths.emplace_back(raw.begin() + first, raw.begin() + last + 1);
  }
  return result;
}

bool separates(const Graph& g, const VertexSet& z, const VertexSet& s,
               const VertexSet& t) {
  require_in_range(g, z);
  require_in_range(g, s);
  require_in_range(g, t);
  const std::size_t n = g.num_vertices();
  std::vector<char> seen(n, 0);
  for (Vertex v : z) seen[v] = 1;
  std::vector<Vertex> stack;
  for (Vertex v : s) {
    if (!seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  std::vector<char> reached(n, 0);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    reached[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (Vertex v : t) {
    if (reached[v]) return false;
  }
  return true;
}

bool is_path(const Graph& g, const VertexPath& path) {
  if (path.empty()) return false;
  std::vector<Vertex> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= g.num_vertices()) return false;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

}  // namespace twsep
