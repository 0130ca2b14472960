#pragma once

#include <string>
#include <string_view>

#include "twsep/decomposition.hpp"
#include "twsep/graph.hpp"

namespace twsep {

// PACE .gr: "p tw <n> <m>" then m lines "<u> <v>" (1-indexed), "c" comments
// anywhere. Throws kParseError with the line number, kDuplicateEdge, kSelfLoop.
Graph parse_gr(std::string_view text);
std::string write_gr(const Graph& g);

// PACE .td. Bags are numbered in preorder from 1, edges listed as "i j" with
// i < j. Throws kInvalidDecomposition if td does not validate against g.
std::string write_td(const RootedTreeDecomposition& td, const Graph& g);

// Rooted at bag 1. Throws kParseError.
RootedTreeDecomposition parse_td(std::string_view text);

// Graphviz tree, nodes in preorder with their bags (0-indexed) as labels.
std::string export_dot(const RootedTreeDecomposition& td);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace twsep
