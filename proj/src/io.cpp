#include "twsep/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "twsep/error.hpp"

namespace twsep {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// Non-empty, non-comment lines.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split(text.substr(start, end - start));
    if (!tokens.empty() && tokens.front() != "c") lines.push_back({number, std::move(tokens)});
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

std::size_t number(const Line& line, std::string_view token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    parse_fail(line.number, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::string bag_text(const VertexSet& bag) {
  std::string out;
  for (Vertex v : bag) {
    if (!out.empty()) out += ", ";
    out += std::to_string(v);
  }
  return "{" + out + "}";
}

}  // namespace

Graph parse_gr(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "missing 'p tw' header");
  const Line& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[0] != "p" || header.tokens[1] != "tw") {
    parse_fail(header.number, "expected 'p tw <n> <m>'");
  }
  const std::size_t n = number(header, header.tokens[2]);
  const std::size_t m = number(header, header.tokens[3]);
  if (lines.size() - 1 != m) {
    throw Error(ErrorCode::kParseError, "header announces " + std::to_string(m) +
                                            " edges, found " +
                                            std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) parse_fail(line.number, "expected '<u> <v>'");
    const std::size_t u = number(line, line.tokens[0]);
    const std::size_t v = number(line, line.tokens[1]);
    if (u < 1 || u > n || v < 1 || v > n) {
      parse_fail(line.number, "vertex out of range 1.." + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  return build_graph(n, edges);
}

std::string write_gr(const Graph& g) {
  std::string out = "p tw " + std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

std::string write_td(const RootedTreeDecomposition& td, const Graph& g) {
  const DecompositionCheck check = validate_decomposition(g, td);
  if (!check.ok) {
    throw Error(ErrorCode::kInvalidDecomposition, check.violations.front());
  }
  const auto order = preorder(td);
  std::vector<std::size_t> label(td.size());
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = i + 1;
  std::size_t largest = 0;
  for (const VertexSet& bag : td.bags) largest = std::max(largest, bag.size());

  std::string out = "s td " + std::to_string(td.size()) + " " + std::to_string(largest) +
                    " " + std::to_string(g.num_vertices()) + "\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    out += "b " + std::to_string(i + 1);
    for (Vertex v : td.bags[order[i]]) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  for (NodeId x : order) {
    if (td.parent[x] == kNoParent) continue;
    out += std::to_string(label[td.parent[x]]) + " " + std::to_string(label[x]) + "\n";
  }
  return out;
}

RootedTreeDecomposition parse_td(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "missing 's td' header");
  const Line& header = lines.front();
  if (header.tokens.size() != 5 || header.tokens[0] != "s" || header.tokens[1] != "td") {
    parse_fail(header.number, "expected 's td <bags> <max-bag> <n>'");
  }
  const std::size_t count = number(header, header.tokens[2]);
  const std::size_t largest = number(header, header.tokens[3]);
  const std::size_t n = number(header, header.tokens[4]);
  if (count == 0) parse_fail(header.number, "decomposition without bags");

  std::vector<VertexSet> bags(count);
  std::vector<char> seen(count, 0);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.front() == "b") {
      if (line.tokens.size() < 2) parse_fail(line.number, "bag line without an index");
      const std::size_t id = number(line, line.tokens[1]);
      if (id < 1 || id > count) parse_fail(line.number, "bag index out of range");
      if (seen[id - 1]) parse_fail(line.number, "bag " + std::to_string(id) + " repeated");
      seen[id - 1] = 1;
      std::vector<Vertex> members;
      for (std::size_t k = 2; k < line.tokens.size(); ++k) {
        const std::size_t v = number(line, line.tokens[k]);
        if (v < 1 || v > n) parse_fail(line.number, "vertex out of range");
        members.push_back(static_cast<Vertex>(v - 1));
      }
      if (members.size() > largest) parse_fail(line.number, "bag larger than announced");
      bags[id - 1] = VertexSet(std::move(members));
    } else {
      if (line.tokens.size() != 2) parse_fail(line.number, "expected '<i> <j>'");
      const std::size_t x = number(line, line.tokens[0]);
      const std::size_t y = number(line, line.tokens[1]);
      if (x < 1 || x > count || y < 1 || y > count) {
        parse_fail(line.number, "tree edge refers to a missing bag");
      }
      edges.emplace_back(x - 1, y - 1);
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!seen[i]) throw Error(ErrorCode::kParseError, "bag " + std::to_string(i + 1) + " missing");
  }
  try {
    return root_tree(std::move(bags), edges, 0, n);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string export_dot(const RootedTreeDecomposition& td) {
  std::string out = "graph decomposition {\n  node [shape=box];\n";
  if (td.size() == 0) return out + "}\n";
  const auto order = preorder(td);
  for (NodeId x : order) {
    out += "  n" + std::to_string(x) + " [label=\"" + bag_text(td.bags[x]) + "\"];\n";
  }
  for (NodeId x : order) {
    if (td.parent[x] == kNoParent) continue;
    out += "  n" + std::to_string(td.parent[x]) + " -- n" + std::to_string(x) + ";\n";
  }
  return out + "}\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  out << content;
}

}  // namespace twsep
