#include "twsep/verification.hpp"

#include <bit>
#include <chrono>
#include <queue>

#include "twsep/error.hpp"

namespace twsep {

namespace {

using Mask = std::uint32_t;

// Vertices outside S ∪ {v} reachable from v through S.
Mask outer_reach(const std::vector<Mask>& adj, Mask s, Vertex v) {
  Mask seen = Mask{1} << v;
  Mask frontier = seen;
  Mask found = 0;
  while (frontier) {
    const Vertex x = static_cast<Vertex>(std::countr_zero(frontier));
    frontier &= frontier - 1;
    const Mask next = adj[x] & ~seen;
    seen |= next;
    found |= next & ~s;
    frontier |= next & s;
  }
  return found;
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, std::size_t limit) {
  const std::size_t n = g.num_vertices();
  if (n > limit || n > 24) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "treewidth_exact is limited to " + std::to_string(std::min<std::size_t>(limit, 24)) +
                    " vertices, got " + std::to_string(n));
  }
  TreewidthResult result;
  if (n == 0) {
    result.witness = root_tree({VertexSet{}}, {}, 0, 0);
    return result;
  }
  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  const Mask full = (Mask{1} << n) - 1;
  // best[S]: least possible max |Q| when the vertices of S are eliminated first.
  std::vector<std::int8_t> best(std::size_t{1} << n, 0);
  std::vector<std::int8_t> last(std::size_t{1} << n, -1);
  best[0] = -1;
  for (Mask s = 1; s <= full; ++s) {
    std::int8_t value = std::numeric_limits<std::int8_t>::max();
    for (Mask rest = s; rest; rest &= rest - 1) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(rest));
      const Mask before = s & ~(Mask{1} << v);
      const auto q = static_cast<std::int8_t>(std::popcount(outer_reach(adj, before, v)));
      const std::int8_t cost = std::max(best[before], q);
      if (cost < value) {
        value = cost;
        last[s] = static_cast<std::int8_t>(v);
      }
    }
    best[s] = value;
  }
  result.width = best[full];

  std::vector<Vertex> order(n);
  Mask s = full;
  for (std::size_t i = n; i-- > 0;) {
    order[i] = static_cast<Vertex>(last[s]);
    s &= ~(Mask{1} << order[i]);
  }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  std::vector<VertexSet> bags(n);
  std::vector<std::pair<NodeId, NodeId>> edges;
  Mask eliminated = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    const Mask q = outer_reach(adj, eliminated, v);
    std::vector<Vertex> bag{v};
    std::size_t parent = n - 1;
    bool has_parent = false;
    for (Mask rest = q; rest; rest &= rest - 1) {
      const Vertex u = static_cast<Vertex>(std::countr_zero(rest));
      bag.push_back(u);
      if (!has_parent || position[u] < parent) parent = position[u];
      has_parent = true;
    }
    bags[i] = VertexSet(std::move(bag));
    if (i + 1 < n) edges.emplace_back(parent, i);
    eliminated |= Mask{1} << v;
  }
  result.witness = root_tree(std::move(bags), edges, n - 1, n);
  return result;
}

ZwCheck check_zw_inequality(const Graph& g, const WSequence& ws, const Separation& ab) {
  if (ws.ell == 0) {
    throw Error(ErrorCode::kPreconditionFailed, "W-sequence has ell = 0");
  }
  const WSequenceCheck ws_check = validate_w_sequence(g, ws);
  if (!ws_check.ok) {
    throw Error(ErrorCode::kPreconditionFailed,
                "invalid W-sequence (" + ws_check.violated.front() + ")");
  }
  const VertexSet& last = ws.last();
  if (!is_subset(ab.a_side, last) || !is_subset(ab.b_side, last)) {
    throw Error(ErrorCode::kPreconditionFailed, "separation leaves W_{ell+1}");
  }
  const InducedSubgraph sub = induced_subgraph(g, last);
  if (!check_separation(sub.graph, sub.to_local(ab.a_side), sub.to_local(ab.b_side)).valid) {
    throw Error(ErrorCode::kPreconditionFailed, "not a separation of G[W_{ell+1}]");
  }

  const auto a_only = static_cast<std::int64_t>(set_difference(ab.a_side, ab.b_side).size());
  const auto order = static_cast<std::int64_t>(ab.order());
  const auto ell = static_cast<std::int64_t>(ws.ell);
  ZwCheck check;
  check.lhs = Rational(static_cast<std::int64_t>(set_difference(ws.w(), ab.b_side).size() +
                                                 set_difference(ws.z_set, ab.b_side).size()));
  check.rhs = Rational(13 * a_only, 6 * (ell + 2)) + Rational(3 * order);
  check.weak_rhs = Rational(2 * a_only, ell + 1) + Rational(3 * order);
  check.holds = check.lhs <= check.rhs;
  check.weak_holds = check.lhs <= check.weak_rhs;
  return check;
}

bool check_sep_le_tw(const Graph& g, const ExactLimits& limits) {
  const std::size_t sep = separation_number(g, limits);
  const std::int64_t tw = treewidth_exact(g, limits.separation_number).width;
  return static_cast<std::int64_t>(sep) <= tw + 1;
}

bool within_main_bound(std::int64_t tw, std::size_t sep) {
  return Constants::kDen * tw <= Constants::kCNum * static_cast<std::int64_t>(sep);
}

namespace gen {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return build_graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidInput, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, n - 1);
  return build_graph(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

Graph grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return build_graph(rows * cols, edges);
}

Graph random_tree(std::size_t n, Rng& rng) {
  if (n <= 2) return path(n);
  std::vector<Vertex> code(n - 2);
  for (Vertex& x : code) x = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : code) ++degree[x];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex x : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    if (--degree[x] == 1) leaves.push(x);
  }
  const Vertex u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return build_graph(n, edges);
}

Graph gnp(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

Graph connected_gnp(std::size_t n, double p, Rng& rng) {
  const Graph base = gnp(n, p, rng);
  std::vector<Edge> edges = base.edges();
  const auto comps = components(base);
  for (std::size_t i = 1; i < comps.size(); ++i) {
    edges.emplace_back(comps[i - 1].front(), comps[i].front());
  }
  return build_graph(n, edges);
}

}  // namespace gen

bool SuiteReport::passed() const {
  return std::all_of(records.begin(), records.end(),
                     [](const SuiteRecord& r) { return r.passed; });
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::optional<std::size_t> structural_sep(const std::string& kind, std::size_t n) {
  if (kind == "path" || kind == "tree") return 1;
  if (kind == "cycle") return n <= 3 ? 1 : 2;
  if (kind == "complete") return (n + 2) / 3;
  return std::nullopt;
}

SuiteRecord run_instance(const Graph& g, std::string id, const std::string& kind,
                         const FamilyConfig& family, const SuiteConfig& config) {
  SuiteRecord record;
  record.id = std::move(id);
  record.n = g.num_vertices();
  record.m = g.num_edges();
  const auto start = std::chrono::steady_clock::now();
  try {
    if (record.n == 0) throw Error(ErrorCode::kInvalidInput, "graph is empty");
    const ExactLimits& limits = config.limits;
    if (record.n <= limits.separation_number) {
      record.sep = separation_number(g, limits);
      record.tw_exact = treewidth_exact(g, limits.separation_number).width;
    }
    ConstructOptions options;
    options.debug_assertions = config.debug_assertions;
    const VertexSet w{0};
    ConstructReport report;
    if (family.a) {
      record.a_used = *family.a;
      record.a_source = "supplied";
    } else if (record.sep) {
      record.a_used = *record.sep;
      record.a_source = "separation_number";
    } else if (auto known = structural_sep(kind, record.n)) {
      record.a_used = *known;
      record.a_source = "structural";
    }
    if (record.a_used > 0) {
      report = construct(g, record.a_used, w, make_oracle(), options);
    } else {
      FeasibleA found = find_min_feasible_a(g, w, OracleOptions{}, options);
      report = std::move(found.report);
      record.a_used = report.a_used;
      record.a_source = found.certified ? "scan" : "scan-uncertified";
    }
    record.width = report.width;
    record.slack = report.bound() - Rational(report.width + 1);
    record.assertions_checked = report.assertion_log.size();
    record.assertion_violations = report.violations();

    std::vector<std::string> problems;
    const DecompositionCheck check = validate_decomposition(g, report.decomposition);
    if (!check.ok) problems.push_back("invalid decomposition: " + check.violations.front());
    if (!Constants::width_within_bound(report.width, record.a_used)) {
      problems.push_back("width bound violated");
    }
    if (record.assertion_violations > 0) problems.push_back("claim violations");
    if (record.sep && record.tw_exact) {
      if (static_cast<std::int64_t>(*record.sep) > *record.tw_exact + 1) {
        problems.push_back("sep > tw + 1");
      }
      if (!within_main_bound(*record.tw_exact, *record.sep)) {
        problems.push_back("tw > c sep");
      }
    }
    record.passed = problems.empty();
    if (!problems.empty()) record.error = problems.front();
  } catch (const std::exception& e) {
    record.passed = false;
    record.error = e.what();
  }
  record.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return record;
}

}  // namespace

SuiteConfig parse_suite_config(const nlohmann::json& j) {
  SuiteConfig config;
  try {
    config.seed = j.value("seed", config.seed);
    config.debug_assertions = j.value("debug_assertions", false);
    config.limits.separation_number =
        j.value("exact_limit", config.limits.separation_number);
    for (const auto& f : j.value("families", nlohmann::json::array())) {
      FamilyConfig family;
      family.kind = f.at("kind").get<std::string>();
      if (f.contains("sizes")) {
        family.sizes = f.at("sizes").get<std::vector<std::size_t>>();
      } else {
        const auto range = f.at("n").get<std::vector<std::size_t>>();
        if (range.size() != 2 || range[0] > range[1]) {
          throw Error(ErrorCode::kParseError, "\"n\" must be [lo, hi]");
        }
        for (std::size_t n = range[0]; n <= range[1]; ++n) family.sizes.push_back(n);
      }
      family.p = f.value("p", family.p);
      family.count = f.value("count", family.count);
      if (f.contains("a") && !(f.at("a").is_string() && f.at("a") == "exact")) {
        family.a = f.at("a").get<std::size_t>();
        if (*family.a == 0) throw Error(ErrorCode::kParseError, "a must be positive");
      }
      static const std::vector<std::string> kinds{"path", "cycle", "tree",
                                                  "grid", "complete", "gnp"};
      if (std::find(kinds.begin(), kinds.end(), family.kind) == kinds.end()) {
        throw Error(ErrorCode::kParseError, "unknown family kind " + family.kind);
      }
      config.families.push_back(std::move(family));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("suite config: ") + e.what());
  }
  return config;
}

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport report;
  for (std::size_t fi = 0; fi < config.families.size(); ++fi) {
    const FamilyConfig& family = config.families[fi];
    const bool random = family.kind == "tree" || family.kind == "gnp";
    for (std::size_t n : family.sizes) {
      const std::size_t copies = random ? family.count : 1;
      for (std::size_t i = 0; i < copies; ++i) {
        std::string id = family.kind + "-" + std::to_string(n);
        gen::Rng rng(mix(config.seed ^ mix(fi << 40 ^ n << 20 ^ i)));
        Graph g;
        try {
          if (family.kind == "path") g = gen::path(n);
          else if (family.kind == "cycle") g = gen::cycle(n);
          else if (family.kind == "complete") g = gen::complete(n);
          else if (family.kind == "grid") g = gen::grid(n, n);
          else if (family.kind == "tree") g = gen::random_tree(n, rng);
          else g = gen::gnp(n, family.p, rng);
        } catch (const std::exception& e) {
          SuiteRecord failed;
          failed.id = id;
          failed.n = n;
          failed.error = e.what();
          report.records.push_back(std::move(failed));
          continue;
        }
        if (random) id += "-" + std::to_string(i);
        report.records.push_back(run_instance(g, std::move(id), family.kind, family, config));
      }
    }
  }
  return report;
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const SuiteRecord& r : report.records) {
    nlohmann::json j{
        {"id", r.id},
        {"n", r.n},
        {"m", r.m},
        {"sep", r.sep ? nlohmann::json(*r.sep) : nlohmann::json()},
        {"tw_exact", r.tw_exact ? nlohmann::json(*r.tw_exact) : nlohmann::json()},
        {"a_used", r.a_used},
        {"a_source", r.a_source},
        {"width", r.width},
        {"slack_num", r.slack.numerator()},
        {"slack_den", r.slack.denominator()},
        {"assertions_checked", r.assertions_checked},
        {"assertion_violations", r.assertion_violations},
        {"elapsed_ms", r.elapsed_ms},
        {"passed", r.passed},
    };
    if (!r.error.empty()) j["error"] = r.error;
    records.push_back(std::move(j));
  }
  return nlohmann::json{{"passed", report.passed()},
                        {"instances", report.records.size()},
                        {"records", std::move(records)}};
}

}  // namespace twsep
