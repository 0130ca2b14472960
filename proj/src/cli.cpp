#include "twsep/cli.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "twsep/constructor.hpp"
#include "twsep/error.hpp"
#include "twsep/io.hpp"
#include "twsep/verification.hpp"

namespace twsep {

namespace {

// Usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text.front() == '-') {
    throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

// "1,4,7" (1-indexed, as in .gr files) -> 0-indexed set.
VertexSet parse_vertex_list(const std::string& text, std::size_t n) {
  std::vector<Vertex> members;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::size_t v = parse_count(text.substr(start, end - start), "--w");
    if (v < 1 || v > n) {
      throw UsageError("--w: vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    members.push_back(static_cast<Vertex>(v - 1));
    start = end + 1;
  }
  return VertexSet(std::move(members));
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> params;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--params: expected key=value, got '" + item + "'");
    }
    params[item.substr(0, eq)] = item.substr(eq + 1);
    start = end + 1;
  }
  return params;
}

OracleMode parse_mode(const std::string& text) {
  if (text == "exact") return OracleMode::kExact;
  if (text == "heuristic") return OracleMode::kHeuristic;
  return OracleMode::kAuto;
}

struct Options {
  std::string input;
  std::string a = "auto";
  std::string w = "auto";
  std::string td_out;
  std::string dot_out;
  std::string stats_out;
  bool debug_assertions = false;
  std::string oracle = "auto";
  std::size_t exact_limit = 14;
  std::uint64_t seed = 1;
  std::string td_in;
  std::string config;
  std::string report;
  std::string kind;
  std::string params;
  std::string out_path;
  bool seed_given = false;
};

class Runner {
 public:
  Runner(Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int construct_cmd() {
    const auto start = std::chrono::steady_clock::now();
    const Graph g = parse_gr(read_file(o_.input));
    if (g.num_vertices() == 0) throw UsageError("input graph has no vertices");
    const VertexSet w = o_.w == "auto" ? VertexSet{0} : parse_vertex_list(o_.w, g.num_vertices());

    OracleOptions oracle_options;
    oracle_options.mode = parse_mode(o_.oracle);
    oracle_options.seed = o_.seed;
    ConstructOptions options;
    options.debug_assertions = o_.debug_assertions;
    ExactLimits limits;
    limits.separation_number = o_.exact_limit;

    ConstructReport report;
    if (o_.a == "auto") {
      const std::size_t floor_a =
          std::max<std::size_t>(1, (Constants::kDen * w.size() + Constants::kTNum - 1) /
                                       Constants::kTNum);
      if (g.num_vertices() <= limits.separation_number) {
        const std::size_t a = std::max(separation_number(g, limits), floor_a);
        report = construct(g, a, w, make_oracle(oracle_options), options);
      } else {
        // Scan with exhaustive oracles only, so the reported a is certified.
        OracleOptions exact = oracle_options;
        exact.mode = OracleMode::kExact;
        try {
          report = find_min_feasible_a(g, w, exact, options).report;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kSizeLimitExceeded) throw;
          throw UsageError("--a auto: cannot certify a on " + std::to_string(g.num_vertices()) +
                           " vertices (" + e.what() + "); pass --a explicitly");
        }
      }
    } else {
      const std::size_t a = parse_count(o_.a, "--a");
      report = construct(g, a, w, make_oracle(oracle_options), options);
    }

    const DecompositionCheck check = validate_decomposition(g, report.decomposition);
    const bool bound_ok = Constants::width_within_bound(report.width, report.a_used);
    if (!o_.td_out.empty()) write_file(o_.td_out, write_td(report.decomposition, g));
    if (!o_.dot_out.empty()) write_file(o_.dot_out, export_dot(report.decomposition));
    const double elapsed = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (!o_.stats_out.empty()) {
      const Rational bound = report.bound();
      nlohmann::json stats{
          {"n", g.num_vertices()},
          {"m", g.num_edges()},
          {"a_used", report.a_used},
          {"width", report.width},
          {"bound_rhs_num", bound.numerator()},
          {"bound_rhs_den", bound.denominator()},
          {"oracle_calls", report.stats.oracle_calls},
          {"elapsed_ms", elapsed},
          {"assertions_checked", report.assertion_log.size()},
          {"assertion_violations", report.violations()},
          {"certificate_bag", report.certificate + 1},
          {"recursion_calls", report.stats.calls},
          {"max_depth", report.stats.max_depth},
      };
      write_file(o_.stats_out, stats.dump(2) + "\n");
    }
    out_ << "width " << report.width << " a " << report.a_used << " bound "
         << report.bound().numerator() << "/" << report.bound().denominator() << "\n";
    if (!check.ok) {
      err_ << "decomposition invalid: " << check.violations.front() << "\n";
      return kExitFailure;
    }
    if (!bound_ok || report.violations() > 0) {
      err_ << "bound or claim check failed\n";
      return kExitFailure;
    }
    return kExitOk;
  }

  int validate_cmd() {
    const Graph g = parse_gr(read_file(o_.input));
    const RootedTreeDecomposition td = parse_td(read_file(o_.td_in));
    const DecompositionCheck check = validate_decomposition(g, td);
    if (!check.ok) {
      for (const std::string& v : check.violations) err_ << v << "\n";
      return kExitFailure;
    }
    out_ << "valid width " << width(td) << "\n";
    return kExitOk;
  }

  int sep_cmd() {
    ExactLimits limits;
    limits.separation_number = o_.exact_limit;
    out_ << separation_number(parse_gr(read_file(o_.input)), limits) << "\n";
    return kExitOk;
  }

  int tw_cmd() {
    out_ << treewidth_exact(parse_gr(read_file(o_.input)), o_.exact_limit).width << "\n";
    return kExitOk;
  }

  int theorem2_cmd() {
    const Graph g = parse_gr(read_file(o_.input));
    const std::size_t a = parse_count(o_.a, "--a");
    const ConstructReport report = construct_theorem2(g, a);
    if (!o_.td_out.empty()) write_file(o_.td_out, write_td(report.decomposition, g));
    out_ << "width " << report.width << " a " << a << " max_interface "
         << report.max_interface << "\n";
    return kExitOk;
  }

  int suite_cmd() {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(o_.config));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseError, std::string("suite config: ") + e.what());
    }
    SuiteConfig config = parse_suite_config(j);
    if (o_.seed_given) config.seed = o_.seed;
    if (o_.debug_assertions) config.debug_assertions = true;
    const SuiteReport report = run_suite(config);
    if (!o_.report.empty()) write_file(o_.report, to_json(report).dump(2) + "\n");
    std::size_t passed = 0;
    for (const SuiteRecord& r : report.records) {
      if (r.passed) {
        ++passed;
      } else {
        err_ << "FAIL " << r.id << ": " << r.error << "\n";
      }
    }
    out_ << "instances " << report.records.size() << " passed " << passed << "\n";
    return report.passed() ? kExitOk : kExitFailure;
  }

  int gen_cmd() {
    auto params = parse_params(o_.params);
    auto count = [&](const std::string& key) {
      auto it = params.find(key);
      if (it == params.end()) throw UsageError("--params: missing " + key);
      return parse_count(it->second, key);
    };
    gen::Rng rng(o_.seed);
    Graph g;
    if (o_.kind == "path") g = gen::path(count("n"));
    else if (o_.kind == "cycle") g = gen::cycle(count("n"));
    else if (o_.kind == "complete") g = gen::complete(count("n"));
    else if (o_.kind == "tree") g = gen::random_tree(count("n"), rng);
    else if (o_.kind == "grid") {
      const std::size_t rows = count("rows");
      g = gen::grid(rows, params.count("cols") ? count("cols") : rows);
    } else {
      auto it = params.find("p");
      if (it == params.end()) throw UsageError("--params: missing p");
      double p = 0;
      try {
        p = std::stod(it->second);
      } catch (const std::exception&) {
        throw UsageError("--params: p must be a number");
      }
      if (!(p >= 0 && p <= 1)) throw UsageError("--params: p must lie in [0, 1]");
      g = gen::gnp(count("n"), p, rng);
    }
    const std::string text = write_gr(g);
    if (o_.out_path.empty()) {
      out_ << text;
    } else {
      write_file(o_.out_path, text);
    }
    return kExitOk;
  }

 private:
  Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tree decompositions from balanced separations"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "build a decomposition of width < (7915/139) a");
  construct->add_option("--input", o.input, "graph in .gr format")->required();
  construct->add_option("--a", o.a, "separation bound or 'auto'");
  construct->add_option("--w", o.w, "comma-separated 1-indexed vertices or 'auto'");
  construct->add_option("--td", o.td_out, "write the decomposition (.td)");
  construct->add_option("--dot", o.dot_out, "write a graphviz rendering");
  construct->add_option("--stats", o.stats_out, "write JSON statistics");
  construct->add_flag("--debug-assertions", o.debug_assertions, "check per-node claims");
  construct->add_option("--oracle", o.oracle, "auto | exact | heuristic")
      ->check(CLI::IsMember({"auto", "exact", "heuristic"}));
  construct->add_option("--exact-limit", o.exact_limit, "largest n for separation_number");
  construct->add_option("--seed", o.seed, "heuristic oracle seed");

  auto* validate = app.add_subcommand("validate", "check a .td file against a graph");
  validate->add_option("--input", o.input)->required();
  validate->add_option("--td", o.td_in)->required();

  auto* sep = app.add_subcommand("sep", "exact separation number");
  sep->add_option("--input", o.input)->required();
  sep->add_option("--exact-limit", o.exact_limit);

  auto* tw = app.add_subcommand("tw", "exact treewidth");
  tw->add_option("--input", o.input)->required();
  tw->add_option("--exact-limit", o.exact_limit);

  auto* theorem2 = app.add_subcommand("theorem2", "width < 4a from W-balanced separations");
  theorem2->add_option("--input", o.input)->required();
  theorem2->add_option("--a", o.a)->required();
  theorem2->add_option("--td", o.td_out);

  auto* suite = app.add_subcommand("suite", "run a generator corpus");
  suite->add_option("--config", o.config, "JSON suite configuration")->required();
  suite->add_option("--seed", o.seed);
  suite->add_option("--report", o.report, "write the JSON report");
  suite->add_flag("--debug-assertions", o.debug_assertions);

  auto* gen = app.add_subcommand("gen", "write a generated graph in .gr format");
  gen->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "tree", "grid", "complete", "gnp"}));
  gen->add_option("--params", o.params, "e.g. n=10 or rows=4,cols=5 or n=20,p=0.3");
  gen->add_option("--seed", o.seed);
  gen->add_option("--out", o.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.seed_given = suite->count("--seed") > 0;

  Runner runner(o, out, err);
  try {
    if (*construct) return runner.construct_cmd();
    if (*validate) return runner.validate_cmd();
    if (*sep) return runner.sep_cmd();
    if (*tw) return runner.tw_cmd();
    if (*theorem2) return runner.theorem2_cmd();
    if (*suite) return runner.suite_cmd();
    return runner.gen_cmd();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleFailure& e) {
    err << "oracle failure (" << (e.certified() ? "certified" : "not certified")
        << "): no balanced separation of order <= " << e.bound() << " for "
        << e.witness().to_string() << "\n";
    return kExitFailure;
  } catch (const WBalancedUnavailable& e) {
    err << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kInvalidDecomposition ? kExitFailure : kExitUsage;
  }
}

int dispatch(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace twsep
