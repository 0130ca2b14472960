#include "twsep/wsequence.hpp"

#include <stdexcept>

#include "twsep/error.hpp"

namespace twsep {

VertexSet WSequence::delta(std::size_t i) const {
  return i == 0 ? levels[0] : set_difference(levels[i], levels[i - 1]);
}

bool WSequenceCheck::has(const std::string& tag) const {
  return std::find(violated.begin(), violated.end(), tag) != violated.end();
}

WSequence build_w_sequence(const Graph& g, const VertexSet& w, std::size_t width) {
  if (w.empty()) throw Error(ErrorCode::kEmptyW, "W must be non-empty");
  if (w.back() >= g.num_vertices()) {
    throw Error(ErrorCode::kVertexOutOfRange, "W = " + w.to_string());
  }
  if (width == 0 || width > w.size()) {
    throw Error(ErrorCode::kWidthOutOfRange,
                "width " + std::to_string(width) + " with |W| = " +
                    std::to_string(w.size()));
  }

  WSequence ws;
  ws.width = width;
  ws.levels.push_back(w);
  std::vector<VertexPath> trivial;
  for (Vertex v : w) trivial.push_back({v});
  ws.witness_paths.push_back(std::move(trivial));

  const VertexSet all = g.vertices();
  while (true) {
    const VertexSet& current = ws.levels.back();
    PathResult found = disjoint_paths(g, set_difference(all, current), w, width);
    // Paths start at their last vertex outside W_i and end at their first
    // vertex in W, so the whole path lies in W_{i+1}.
    std::vector<Vertex> grown(current.begin(), current.end());
    for (const VertexPath& p : found.paths) grown.push_back(p.front());
    ws.levels.emplace_back(std::move(grown));
    const std::size_t r = found.paths.size();
    ws.witness_paths.push_back(std::move(found.paths));
    if (r == width) continue;

    ws.ell = ws.levels.size() - 2;
    ws.z_set = std::move(*found.separator);
    if (ws.z_set.size() != r || !is_subset(ws.z_set, ws.levels.back())) {
      throw std::logic_error("Menger separator " + ws.z_set.to_string() +
                             " inconsistent with " + std::to_string(r) + " paths");
    }
    return ws;
  }
}

WSequenceCheck validate_w_sequence(const Graph& g, const WSequence& ws,
                                   const std::optional<VertexSet>& expected_w) {
  WSequenceCheck check;
  auto fail = [&](const char* tag) {
    if (!check.has(tag)) check.violated.emplace_back(tag);
    check.ok = false;
  };
  const std::size_t n = g.num_vertices();
  if (ws.levels.size() < 2 || ws.levels.size() != ws.ell + 2 ||
      ws.witness_paths.size() != ws.levels.size()) {
    fail("shape");
    return check;
  }
  for (const VertexSet& level : ws.levels) {
    if (!level.empty() && level.back() >= n) {
      fail("shape");
      return check;
    }
  }
  for (std::size_t i = 0; i + 1 < ws.levels.size(); ++i) {
    if (!is_subset(ws.levels[i], ws.levels[i + 1])) fail("nesting");
  }

  const VertexSet& w = ws.levels.front();
  if (expected_w ? w != *expected_w : w.empty()) fail("a");
  for (std::size_t i = 1; i <= ws.ell; ++i) {
    if (ws.s(i) != ws.width) fail("b");
  }
  if (ws.s(ws.ell + 1) >= ws.width) fail("c");

  for (std::size_t i = 0; i < ws.levels.size(); ++i) {
    const VertexSet& level = ws.levels[i];
    const VertexSet delta = ws.delta(i);
    InducedSubgraph sub = induced_subgraph(g, level);
    PathResult linked =
        disjoint_paths(sub.graph, sub.to_local(delta), sub.to_local(w), delta.size());
    if (linked.paths.size() < delta.size()) fail("d");

    const auto& paths = ws.witness_paths[i];
    if (paths.size() != delta.size()) {
      fail("paths");
      continue;
    }
    std::vector<char> used(n, 0);
    for (const VertexPath& p : paths) {
      if (!is_path(g, p) || !delta.contains(p.front()) || !w.contains(p.back())) {
        fail("paths");
        break;
      }
      for (Vertex v : p) {
        if (!level.contains(v) || used[v]) fail("paths");
        used[v] = 1;
      }
    }
  }

  const VertexSet& last = ws.levels.back();
  const VertexSet outside = set_difference(g.vertices(), ws.levels[ws.ell]);
  if (!is_subset(ws.z_set, last) || ws.z_set.size() != ws.s(ws.ell + 1) ||
      !separates(g, ws.z_set, outside, w)) {
    fail("e");
  }
  return check;
}

}  // namespace twsep
