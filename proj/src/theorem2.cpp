#include <optional>
#include <stdexcept>

#include "twsep/constructor.hpp"
#include "twsep/error.hpp"

namespace twsep {

namespace {

// Grows a decomposition of G[X] below `attach`, whose bag already holds W.
// Invariants: |W| <= 3a and every new bag has at most 4a vertices.
class Theorem2Builder {
 public:
  Theorem2Builder(const Graph& g, std::size_t a, ConstructReport& report)
      : g_(g), a_(a), report_(report) {}

  void extend(VertexSet x, VertexSet w, std::optional<NodeId> attach) {
    while (true) {
      ++report_.stats.calls;
      report_.max_interface = std::max(report_.max_interface, w.size());
      if (w.size() > 3 * a_) throw std::logic_error("interface grew past 3a");
      const VertexSet rest = set_difference(x, w);
      if (rest.empty()) return;
      if (x.size() <= 4 * a_) {
        ++report_.stats.base_cases;
        add(std::move(x), attach);
        return;
      }

      const Vertex u = rest.front();
      const bool full = w.size() == 3 * a_;
      const VertexSet query = full ? set_union(w, VertexSet{u}) : w;
      const InducedSubgraph sub = induced_subgraph(g_, x);
      ++report_.stats.oracle_calls;
      const auto local = w_balanced_separation_up_to(sub.graph, sub.to_local(query), a_);
      if (!local) throw WBalancedUnavailable(query, a_);
      const VertexSet a_side = sub.to_original(local->a_side);
      const VertexSet b_side = sub.to_original(local->b_side);

      if (a_side != x && b_side != x) {
        const VertexSet middle = set_intersection(a_side, b_side);
        const NodeId node = add(set_union(w, middle), attach);
        VertexSet w_a = set_union(set_intersection(a_side, w), middle);
        VertexSet w_b = set_union(set_intersection(b_side, w), middle);
        extend(a_side, std::move(w_a), node);
        extend(b_side, std::move(w_b), node);
        return;
      }
      if (full) {
        // A W+-balanced separation of order <= a with |W+| = 3a + 1 cannot
        // have a side equal to X.
        throw std::logic_error("degenerate separation for a full interface");
      }
      w = set_union(w, VertexSet{u});
      attach = add(w, attach);
    }
  }

 private:
  NodeId add(VertexSet bag, std::optional<NodeId> attach) {
    if (bag.size() > 4 * a_) throw std::logic_error("bag larger than 4a");
    bags_.push_back(std::move(bag));
    const NodeId node = bags_.size() - 1;
    if (attach) edges_.emplace_back(*attach, node);
    return node;
  }

 public:
  std::vector<VertexSet> bags_;
  std::vector<std::pair<NodeId, NodeId>> edges_;

 private:
  const Graph& g_;
  std::size_t a_;
  ConstructReport& report_;
};

}  // namespace

ConstructReport construct_theorem2(const Graph& g, std::size_t a, const ExactLimits& limits) {
  if (a == 0) throw Error(ErrorCode::kInvalidInput, "a must be at least 1");
  if (g.num_vertices() > limits.single_graph) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "construct_theorem2 searches exhaustively; n = " +
                    std::to_string(g.num_vertices()) + " exceeds " +
                    std::to_string(limits.single_graph));
  }
  ConstructReport report;
  report.a_used = a;
  Theorem2Builder builder(g, a, report);
  builder.extend(g.vertices(), VertexSet{}, std::nullopt);
  if (builder.bags_.empty()) builder.bags_.emplace_back();
  report.decomposition =
      root_tree(std::move(builder.bags_), builder.edges_, 0, g.num_vertices());
  report.width = width(report.decomposition);
  const DecompositionCheck check = validate_decomposition(g, report.decomposition);
  if (!check.ok) {
    throw std::logic_error("W-balanced construction is invalid: " + check.violations.front());
  }
  return report;
}

}  // namespace twsep
