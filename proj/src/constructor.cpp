#include "twsep/constructor.hpp"

#include <stdexcept>

#include "twsep/error.hpp"
#include "twsep/wsequence.hpp"

namespace twsep {

std::string_view to_string(Claim claim) {
  switch (claim) {
    case Claim::kCellBound: return "cell_bound";
    case Claim::kLeafInterface: return "leaf_interface";
    case Claim::kTreewidthBound: return "treewidth_bound";
    case Claim::kStructural: return "structural";
  }
  return "unknown";
}

Rational ConstructReport::ratio() const {
  return Rational(width + 1, static_cast<std::int64_t>(a_used));
}

std::size_t ConstructReport::violations() const {
  std::size_t count = 0;
  for (const ClaimCheck& c : assertion_log) count += c.holds ? 0 : 1;
  return count;
}

namespace {

// A forest fragment in top-level vertex ids, later rooted at `certificate`.
struct Piece {
  std::vector<VertexSet> bags;
  std::vector<std::pair<NodeId, NodeId>> edges;
  NodeId certificate = 0;

  NodeId add(VertexSet bag) {
    bags.push_back(std::move(bag));
    return bags.size() - 1;
  }
  void connect(NodeId x, NodeId y) { edges.emplace_back(x, y); }
  // Appends another fragment and returns the id offset of its nodes.
  NodeId absorb(Piece&& other) {
    const NodeId offset = bags.size();
    for (VertexSet& bag : other.bags) bags.push_back(std::move(bag));
    for (auto [x, y] : other.edges) edges.emplace_back(x + offset, y + offset);
    return offset;
  }
};

Rational cell_bound_rhs(std::size_t a, std::size_t depth) {
  Rational scale = Rational(13, 6) * Constants::t() * static_cast<std::int64_t>(a);
  for (std::size_t i = 0; i < depth; ++i) scale *= Rational(2, 3);
  return scale + Rational(static_cast<std::int64_t>(3 * depth * a));
}

class Builder {
 public:
  Builder(std::size_t a, const BalancedSeparationOracle& oracle,
          const ConstructOptions& options, ConstructReport& report)
      : a_(a), oracle_(oracle), options_(options), report_(report) {}

  Piece run(const Graph& g, const VertexSet& w, const std::vector<Vertex>& to_top,
            std::size_t depth);

 private:
  VertexSet lift(const VertexSet& local, const std::vector<Vertex>& to_top) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_top[v]);
    return VertexSet(std::move(out));
  }

  void record(Claim claim, std::size_t depth, Rational lhs, Rational rhs, bool holds,
              std::string note) {
    if (!options_.debug_assertions) return;
    report_.assertion_log.push_back(
        ClaimCheck{claim, depth, lhs, rhs, holds, std::move(note)});
  }
  void structural(bool holds, std::string note) {
    record(Claim::kStructural, 0, Rational(holds ? 1 : 0), Rational(1), holds,
           std::move(note));
  }

  Piece recurse(const Graph& g, const VertexSet& keep, const VertexSet& w,
                const std::vector<Vertex>& to_top, std::size_t depth);
  Piece cover_y_side(const Graph& g, const WSequence& ws, const Separation& xy,
                     const std::vector<Vertex>& to_top, std::size_t depth);

  std::size_t a_;
  const BalancedSeparationOracle& oracle_;
  const ConstructOptions& options_;
  ConstructReport& report_;
};

Piece Builder::recurse(const Graph& g, const VertexSet& keep, const VertexSet& w,
                       const std::vector<Vertex>& to_top, std::size_t depth) {
  if (keep.size() >= g.num_vertices()) {
    throw Error(ErrorCode::kRecursionGuard,
                "recursive call on " + std::to_string(keep.size()) + " of " +
                    std::to_string(g.num_vertices()) + " vertices");
  }
  const InducedSubgraph sub = induced_subgraph(g, keep);
  std::vector<Vertex> sub_to_top;
  sub_to_top.reserve(sub.original.size());
  for (Vertex v : sub.original) sub_to_top.push_back(to_top[v]);
  return run(sub.graph, sub.to_local(w), sub_to_top, depth + 1);
}

Piece Builder::run(const Graph& g, const VertexSet& w, const std::vector<Vertex>& to_top,
                   std::size_t depth) {
  RecursionStats& stats = report_.stats;
  ++stats.calls;
  stats.max_depth = std::max(stats.max_depth, depth);
  const std::size_t n = g.num_vertices();
  if (!Constants::interface_fits(w.size(), a_)) {
    throw std::logic_error("interface of size " + std::to_string(w.size()) +
                           " exceeds t a");
  }

  Piece piece;
  if (Constants::below_base_threshold(n, a_)) {
    ++stats.base_cases;
    piece.add(lift(g.vertices(), to_top));
    return piece;
  }

  const WSequence ws = build_w_sequence(g, w, w.size());
  stats.max_ell = std::max(stats.max_ell, ws.ell);
  const VertexSet outside = set_difference(g.vertices(), ws.levels[ws.ell]);
  const Separation xy = stz_separation(g, outside, ws.z_set, w);
  const VertexSet& x = xy.a_side;
  const VertexSet& y = xy.b_side;
  if (options_.debug_assertions) {
    structural(ws.z_set.size() < w.size(), "|Z| < |W|");
    structural(xy.separator() == ws.z_set, "X ∩ Y = Z");
    structural(is_subset(y, ws.last()), "Y ⊆ W_{ell+1}");
  }

  piece = cover_y_side(g, ws, xy, to_top, depth);
  const NodeId y_root = piece.certificate;

  if (!set_difference(x, y).empty()) {
    const VertexSet interface =
        ws.z_set.empty() ? VertexSet{x.front()} : ws.z_set;
    Piece px = recurse(g, x, interface, to_top, depth);
    const NodeId offset = piece.absorb(std::move(px));
    piece.connect(y_root, offset + px.certificate);
  }
  piece.certificate = y_root;
  return piece;
}

Piece Builder::cover_y_side(const Graph& g, const WSequence& ws, const Separation& xy,
                            const std::vector<Vertex>& to_top, std::size_t depth) {
  RecursionStats& stats = report_.stats;
  const VertexSet& w = ws.w();
  const VertexSet wz = set_union(w, ws.z_set);
  Piece piece;

  if (ws.ell == 0) {
    // Y ⊆ W_1 = W ∪ Z, so a single bag covers G[Y].
    record(Claim::kTreewidthBound, 0, Rational(static_cast<std::int64_t>(wz.size())),
           Constants::c() * static_cast<std::int64_t>(a_),
           Constants::bag_within_bound(wz.size(), a_), "bag W ∪ Z");
    piece.certificate = piece.add(lift(wz, to_top));
    return piece;
  }

  const VertexSet& last = ws.last();
  const InducedSubgraph sub = induced_subgraph(g, last);
  SeparationTree st;
  try {
    st = separation_tree(sub.graph, a_, Constants::kHeight, oracle_);
  } catch (const OracleFailure& failure) {
    throw OracleFailure(lift(sub.to_original(failure.witness()), to_top), failure.bound(),
                        failure.certified());
  }
  ++stats.separation_trees;
  stats.oracle_calls += st.oracle_calls;

  const RootedTreeDecomposition& tp = st.decomposition;
  const auto kids = children(tp);
  if (kids[tp.root].empty()) {
    throw std::logic_error("separation tree of G[W_{ell+1}] is a single leaf");
  }

  const VertexSet wz_local = sub.to_local(wz);
  if (options_.debug_assertions) {
    const auto parts = all_boundaries_and_interiors(tp);
    const auto depth_of = depths(tp);
    bool boundaries_match = true;
    for (NodeId node = 0; node < tp.size(); ++node) {
      boundaries_match = boundaries_match && parts[node].boundary == st.passed_boundary[node];
      const std::size_t lhs = intersection_size(parts[node].interior, wz_local);
      const Rational rhs = cell_bound_rhs(a_, depth_of[node]);
      record(Claim::kCellBound, depth_of[node], Rational(static_cast<std::int64_t>(lhs)),
             rhs, Rational(static_cast<std::int64_t>(lhs)) <= rhs,
             "node " + std::to_string(node));
    }
    structural(boundaries_match, "boundary(x) equals the passed boundary");
  }

  const Separation local_sep{sub.to_local(set_union(set_intersection(xy.a_side, last), w)),
                             sub.to_local(xy.b_side)};
  const RootedTreeDecomposition restricted =
      restrict_decomposition(sub.graph, tp, local_sep);
  const auto parts = all_boundaries_and_interiors(restricted);
  if (options_.debug_assertions) {
    structural(is_subset(wz_local, restricted.bags[restricted.root]),
               "root bag contains W ∪ Z");
  }

  std::vector<NodeId> placed(tp.size(), 0);
  for (NodeId node : preorder(tp)) {
    NodeId id;
    const VertexSet bag = sub.to_original(restricted.bags[node]);
    if (!kids[node].empty()) {
      record(Claim::kTreewidthBound, 0, Rational(static_cast<std::int64_t>(bag.size())),
             Constants::c() * static_cast<std::int64_t>(a_),
             Constants::bag_within_bound(bag.size(), a_), "node " + std::to_string(node));
      id = piece.add(lift(bag, to_top));
    } else {
      const VertexSet boundary = sub.to_original(parts[node].boundary);
      record(Claim::kLeafInterface, 0, Rational(static_cast<std::int64_t>(boundary.size())),
             Constants::t() * static_cast<std::int64_t>(a_),
             Constants::interface_fits(boundary.size(), a_),
             "leaf " + std::to_string(node));
      if (bag.empty()) {
        id = piece.add(VertexSet{});
      } else {
        const VertexSet interface = boundary.empty() ? VertexSet{bag.front()} : boundary;
        Piece leaf = recurse(g, bag, interface, to_top, depth);
        const NodeId offset = piece.absorb(std::move(leaf));
        id = offset + leaf.certificate;
      }
    }
    placed[node] = id;
    if (tp.parent[node] != kNoParent) piece.connect(placed[tp.parent[node]], id);
  }
  piece.certificate = placed[tp.root];
  return piece;
}

void check_inputs(const Graph& g, std::size_t a, const VertexSet& w) {
  if (a == 0) throw Error(ErrorCode::kInvalidInput, "a must be at least 1");
  if (w.empty()) throw Error(ErrorCode::kEmptyW, "W must be non-empty");
  if (w.back() >= g.num_vertices()) {
    throw Error(ErrorCode::kVertexOutOfRange, "W = " + w.to_string());
  }
  if (!Constants::interface_fits(w.size(), a)) {
    throw Error(ErrorCode::kInvalidInput,
                "|W| = " + std::to_string(w.size()) + " exceeds (3888/139) a for a = " +
                    std::to_string(a));
  }
}

}  // namespace

ConstructReport construct(const Graph& g, std::size_t a, const VertexSet& w,
                          const BalancedSeparationOracle& oracle,
                          const ConstructOptions& options) {
  check_inputs(g, a, w);
  ConstructReport report;
  report.a_used = a;
  Builder builder(a, oracle, options, report);
  const VertexSet all = g.vertices();
  const std::vector<Vertex> identity(all.begin(), all.end());
  Piece piece = builder.run(g, w, identity, 0);

  report.certificate = piece.certificate;
  report.decomposition =
      root_tree(std::move(piece.bags), piece.edges, piece.certificate, g.num_vertices());
  report.width = width(report.decomposition);

  const DecompositionCheck check = validate_decomposition(g, report.decomposition);
  if (!check.ok) {
    throw std::logic_error("constructed decomposition is invalid: " +
                           check.violations.front());
  }
  if (!is_subset(w, report.decomposition.bags[report.certificate])) {
    throw std::logic_error("certificate bag does not contain W");
  }
  if (options.debug_assertions) {
    const bool holds = Constants::width_within_bound(report.width, a);
    report.assertion_log.push_back(ClaimCheck{
        Claim::kTreewidthBound, 0, Rational(report.width + 1),
        Constants::c() * static_cast<std::int64_t>(a), holds, "overall width + 1"});
  }
  return report;
}

FeasibleA find_min_feasible_a(const Graph& g, const VertexSet& w,
                              const OracleOptions& oracle_options,
                              const ConstructOptions& options) {
  if (g.num_vertices() == 0) throw Error(ErrorCode::kInvalidInput, "graph is empty");
  if (w.empty()) throw Error(ErrorCode::kEmptyW, "W must be non-empty");
  const std::int64_t needed = Constants::kDen * static_cast<std::int64_t>(w.size());
  std::size_t a = std::max<std::int64_t>(1, (needed + Constants::kTNum - 1) / Constants::kTNum);
  const BalancedSeparationOracle oracle = make_oracle(oracle_options);
  FeasibleA result;
  while (true) {
    try {
      result.report = construct(g, a, w, oracle, options);
      return result;
    } catch (const OracleFailure& failure) {
      result.certified = result.certified && failure.certified();
      ++a;
    }
  }
}

}  // namespace twsep
