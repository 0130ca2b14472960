#include "twsep/decomposition.hpp"

#include <deque>
#include <functional>
#include <stdexcept>

#include "twsep/error.hpp"

namespace twsep {

RootedTreeDecomposition root_tree(std::vector<VertexSet> bags,
                                  const std::vector<std::pair<NodeId, NodeId>>& edges,
                                  NodeId root, std::size_t host_n) {
  const std::size_t size = bags.size();
  if (size == 0 || root >= size || edges.size() + 1 != size) {
    throw Error(ErrorCode::kInvalidInput, "edge list does not describe a tree");
  }
  std::vector<std::vector<NodeId>> adj(size);
  for (auto [x, y] : edges) {
    if (x >= size || y >= size) {
      throw Error(ErrorCode::kInvalidInput, "tree edge refers to a missing node");
    }
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  RootedTreeDecomposition td;
  td.bags = std::move(bags);
  td.parent.assign(size, kNoParent);
  td.root = root;
  td.host_n = host_n;
  std::vector<char> seen(size, 0);
  std::deque<NodeId> queue{root};
  seen[root] = 1;
  std::size_t reached = 0;
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    ++reached;
    for (NodeId y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      td.parent[y] = x;
      queue.push_back(y);
    }
  }
  if (reached != size) {
    throw Error(ErrorCode::kInvalidInput, "edge list does not describe a tree");
  }
  return td;
}

std::vector<std::vector<NodeId>> children(const RootedTreeDecomposition& td) {
  std::vector<std::vector<NodeId>> out(td.size());
  for (NodeId x = 0; x < td.size(); ++x) {
    if (td.parent[x] != kNoParent) out[td.parent[x]].push_back(x);
  }
  return out;
}

std::vector<NodeId> preorder(const RootedTreeDecomposition& td) {
  const auto kids = children(td);
  std::vector<NodeId> order;
  order.reserve(td.size());
  std::vector<NodeId> stack{td.root};
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (auto it = kids[x].rbegin(); it != kids[x].rend(); ++it) stack.push_back(*it);
  }
  return order;
}

std::vector<std::size_t> depths(const RootedTreeDecomposition& td) {
  std::vector<std::size_t> depth(td.size(), 0);
  for (NodeId x : preorder(td)) {
    if (td.parent[x] != kNoParent) depth[x] = depth[td.parent[x]] + 1;
  }
  return depth;
}

std::size_t height(const RootedTreeDecomposition& td) {
  const auto d = depths(td);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

DecompositionCheck validate_decomposition(const Graph& g,
                                          const RootedTreeDecomposition& td) {
  DecompositionCheck check;
  auto fail = [&](std::string message) {
    check.ok = false;
    check.violations.push_back(std::move(message));
  };
  const std::size_t size = td.size();
  const std::size_t n = g.num_vertices();
  if (size == 0) {
    fail("tree has no nodes");
    return check;
  }
  if (td.parent.size() != size) {
    fail("parent array has " + std::to_string(td.parent.size()) + " entries for " +
         std::to_string(size) + " bags");
    return check;
  }
  if (td.host_n != n) {
    fail("decomposition is for " + std::to_string(td.host_n) +
         " vertices, graph has " + std::to_string(n));
  }
  if (td.root >= size || td.parent[td.root] != kNoParent) {
    fail("root " + std::to_string(td.root) + " is not a parentless node");
    return check;
  }
  bool parents_ok = true;
  for (NodeId x = 0; x < size; ++x) {
    if (x == td.root) continue;
    if (td.parent[x] == kNoParent) {
      fail("node " + std::to_string(x) + " is a second root");
      parents_ok = false;
    } else if (td.parent[x] >= size) {
      fail("node " + std::to_string(x) + " has a missing parent");
      parents_ok = false;
    }
  }
  if (!parents_ok) return check;
  // Every node must reach the root within `size` steps.
  for (NodeId x = 0; x < size; ++x) {
    NodeId y = x;
    std::size_t steps = 0;
    while (y != td.root && y < size && steps <= size) {
      y = td.parent[y];
      ++steps;
    }
    if (y != td.root) {
      fail("node " + std::to_string(x) + " does not reach the root (cycle)");
      return check;
    }
  }

  std::vector<std::vector<NodeId>> occurrences(n);
  for (NodeId x = 0; x < size; ++x) {
    for (Vertex v : td.bags[x]) {
      if (v >= n) {
        fail("bag " + std::to_string(x) + " holds vertex " + std::to_string(v) +
             " outside the graph");
        continue;
      }
      occurrences[v].push_back(x);
    }
  }
  for (const auto& [u, v] : g.edges()) {
    const auto& ou = occurrences[u];
    const auto& ov = occurrences[v];
    std::vector<NodeId> both;
    std::set_intersection(ou.begin(), ou.end(), ov.begin(), ov.end(),
                          std::back_inserter(both));
    if (both.empty()) {
      fail("edge (" + std::to_string(u) + ", " + std::to_string(v) +
           ") is not covered by any bag");
    }
  }
  std::vector<char> holds(size, 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto& occ = occurrences[v];
    if (occ.empty()) {
      fail("vertex " + std::to_string(v) + " appears in no bag");
      continue;
    }
    for (NodeId x : occ) holds[x] = 1;
    std::size_t tops = 0;
    for (NodeId x : occ) {
      if (x == td.root || !holds[td.parent[x]]) ++tops;
    }
    for (NodeId x : occ) holds[x] = 0;
    if (tops != 1) {
      fail("bags containing vertex " + std::to_string(v) +
           " do not form a connected subtree");
    }
  }
  return check;
}

std::int64_t width(const RootedTreeDecomposition& td) {
  if (td.size() == 0) throw Error(ErrorCode::kEmptyTree, "decomposition has no nodes");
  std::size_t largest = 0;
  for (const VertexSet& bag : td.bags) largest = std::max(largest, bag.size());
  return static_cast<std::int64_t>(largest) - 1;
}

std::vector<BoundaryInterior> all_boundaries_and_interiors(
    const RootedTreeDecomposition& td) {
  std::vector<BoundaryInterior> out(td.size());
  std::vector<VertexSet> below(td.size());
  const auto order = preorder(td);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId x = *it;
    below[x] = set_union(below[x], td.bags[x]);
    if (td.parent[x] != kNoParent) {
      below[td.parent[x]] = set_union(below[td.parent[x]], below[x]);
      out[x].boundary = set_intersection(td.bags[x], td.bags[td.parent[x]]);
    }
    out[x].interior = set_difference(below[x], out[x].boundary);
  }
  return out;
}

BoundaryInterior boundary_and_interior(const RootedTreeDecomposition& td, NodeId x) {
  if (x >= td.size()) {
    throw Error(ErrorCode::kInvalidInput, "node " + std::to_string(x) + " not in tree");
  }
  return all_boundaries_and_interiors(td)[x];
}

RootedTreeDecomposition restrict_decomposition(const Graph& g,
                                               const RootedTreeDecomposition& td_prime,
                                               const Separation& sep) {
  const DecompositionCheck td_check = validate_decomposition(g, td_prime);
  if (!td_check.ok) {
    throw Error(ErrorCode::kInvalidInput,
                "decomposition is not valid: " + td_check.violations.front());
  }
  if (!check_separation(g, sep.a_side, sep.b_side).valid) {
    throw Error(ErrorCode::kInvalidInput, "not a separation of the graph");
  }
  const VertexSet& y = sep.b_side;
  const VertexSet middle = sep.separator();
  const auto parts = all_boundaries_and_interiors(td_prime);
  RootedTreeDecomposition td = td_prime;
  for (NodeId x = 0; x < td.size(); ++x) {
    td.bags[x] = set_union(set_intersection(td_prime.bags[x], y),
                           set_intersection(parts[x].interior, middle));
  }
  return td;
}

RootedTreeDecomposition to_subgraph_ids(const RootedTreeDecomposition& td,
                                        const InducedSubgraph& sub) {
  RootedTreeDecomposition out = td;
  for (VertexSet& bag : out.bags) bag = sub.to_local(bag);
  out.host_n = sub.graph.num_vertices();
  return out;
}

RootedTreeDecomposition to_host_ids(const RootedTreeDecomposition& td,
                                    const InducedSubgraph& sub, std::size_t host_n) {
  RootedTreeDecomposition out = td;
  for (VertexSet& bag : out.bags) bag = sub.to_original(bag);
  out.host_n = host_n;
  return out;
}

namespace {

unsigned __int128 power(unsigned base, std::size_t exp) {
  unsigned __int128 result = 1;
  for (std::size_t i = 0; i < exp; ++i) result *= base;
  return result;
}

}  // namespace

SeparationTree separation_tree(const Graph& g, std::size_t a, std::size_t h,
                               const BalancedSeparationOracle& oracle) {
  if (h > 40) throw Error(ErrorCode::kInvalidInput, "height bound above 40");
  const std::size_t n = g.num_vertices();
  const unsigned __int128 three_h = power(3, h);
  const unsigned __int128 leaf_limit = power(2, h) * n;  // compared with 3^h |V(G') \ ∂'|

  SeparationTree result;
  RootedTreeDecomposition& td = result.decomposition;
  td.host_n = n;

  std::function<void(const VertexSet&, const VertexSet&, NodeId)> build =
      [&](const VertexSet& vertices, const VertexSet& boundary, NodeId parent) {
        const NodeId node = td.bags.size();
        td.bags.emplace_back();
        td.parent.push_back(parent);
        result.passed_boundary.push_back(boundary);

        const VertexSet interior = set_difference(vertices, boundary);
        if (three_h * interior.size() <= leaf_limit) {
          td.bags[node] = vertices;
          return;
        }
        const InducedSubgraph sub = induced_subgraph(g, interior);
        SeparatorOracleOutcome outcome = oracle(sub.graph, a);
        ++result.oracle_calls;
        if (!outcome.separation) {
          throw OracleFailure(sub.to_original(outcome.witness), a, outcome.certified);
        }
        const Separation& local = *outcome.separation;
        if (local.order() > a || !is_balanced(sub.graph, local)) {
          throw std::logic_error("oracle returned an unbalanced or oversized separation");
        }
        result.max_order_used = std::max(result.max_order_used, local.order());
        const VertexSet a_side = sub.to_original(local.a_side);
        const VertexSet b_side = sub.to_original(local.b_side);
        const VertexSet bag = set_union(boundary, set_intersection(a_side, b_side));
        td.bags[node] = bag;
        build(set_union(a_side, boundary), bag, node);
        build(set_union(b_side, boundary), bag, node);
      };
  build(g.vertices(), VertexSet{}, kNoParent);
  td.root = 0;
  return result;
}

}  // namespace twsep
