#include "cli.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pvg/engine.hpp"
#include "pvg/error.hpp"
#include "pvg/forge.hpp"
#include "pvg/format.hpp"
#include "pvg/guessing_ride.hpp"
#include "pvg/hitch_a_ride.hpp"
#include "pvg/instances.hpp"
#include "pvg/meeting_graph.hpp"
#include "pvg/oracle.hpp"

namespace pvg::cli {
namespace {

using nlohmann::ordered_json;

struct Globals {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> move_limit;
  std::optional<std::uint64_t> state_cap;
  std::string out;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
      return kParseFailure;
    case ErrorCode::kNotIdMode:
      return kModeMismatch;
    case ErrorCode::kStrategyDidNotHalt:
      return kMoveLimit;
    case ErrorCode::kIllegalAction:
    case ErrorCode::kInconsistentWalk:
      return kViolation;
    default:
      return kParameterError;
  }
}

std::uint64_t state_cap(const Globals& g) { return g.state_cap.value_or(default_state_cap()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParsedRouteSet load(const std::string& path) { return parse_route_set(read_file(path)); }

// Writes to the -o path if given, else to `out`.
void emit(const Globals& g, std::ostream& out, const std::string& text) {
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + g.out + "'");
  f << text;
}

CarrierId resolve_carrier(const RouteSet& routes, const std::string& name) {
  auto c = routes.find_carrier(name);
  if (!c) throw Error(ErrorCode::kInvalidArgument, "unknown carrier '" + name + "'");
  return *c;
}

Family resolve_family(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "unknown family '" + name + "'");
  return *f;
}

// ---- generate ---------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t p = 0;
  bool emit_bound = false;
  std::string mode = "anonymous";
};

int cmd_generate(const GenerateArgs& a, const Globals& g, std::ostream& out) {
  const InstanceSpec spec{resolve_family(a.family), a.n, a.k, a.p, g.seed};
  Instance inst = generate(spec);
  RouteSet routes = a.mode == "ids" ? inst.routes.with_mode(Mode::kWithIds) : inst.routes;
  const auto bound = a.emit_bound ? inst.lower_bound : std::nullopt;
  const auto start = a.emit_bound ? inst.designated_start : std::nullopt;
  emit(g, out, write_route_set(routes, bound, start));
  return kOk;
}

// ---- validate ---------------------------------------------------------------

int cmd_validate(const std::string& path, const Globals& g, std::ostream& out) {
  const ParsedRouteSet parsed = load(path);
  const RouteSet& rs = parsed.routes;
  const MeetingGraph graph = build_meeting_graph(rs);
  const bool feasible = is_feasible(rs, graph);

  ordered_json j;
  j["n"] = rs.num_sites();
  j["k"] = rs.num_carriers();
  j["p"] = rs.max_period();
  j["mode"] = to_string(rs.mode());
  j["homogeneous"] = is_homogeneous(rs);
  j["feasible"] = feasible;
  const auto labels = graph.components();
  j["components"] = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  ordered_json edges = ordered_json::array();
  for (const MeetingEdge& e : graph.edges()) {
    edges.push_back({{"a", rs.carrier(e.a).name}, {"b", rs.carrier(e.b).name}, {"witnesses", e.witnesses.size()}});
  }
  j["meeting_edges"] = edges;
  ordered_json carriers = ordered_json::array();
  for (const Carrier& c : rs.carriers()) {
    carriers.push_back({{"name", c.name},
                        {"period", c.route.period()},
                        {"simple", is_simple(c.route)},
                        {"irredundant", is_irredundant(c.route)}});
  }
  j["carriers"] = carriers;
  if (parsed.bound) j["bound"] = *parsed.bound;
  if (parsed.start) j["start"] = rs.carrier(*parsed.start).name;
  emit(g, out, j.dump(2) + "\n");
  return feasible ? kOk : kViolation;
}

// ---- explore ----------------------------------------------------------------

struct ExploreArgs {
  std::string in;
  std::string strategy = "hitch";
  std::optional<std::uint64_t> bound;
  bool homogeneous_known = false;
  std::uint64_t g0 = 1;
  std::string start;
  std::string summary;
};

int cmd_explore(const ExploreArgs& a, const Globals& g, std::ostream& out) {
  const ParsedRouteSet parsed = load(a.in);
  const RouteSet& rs = parsed.routes;
  std::unique_ptr<Strategy> strategy;
  if (a.strategy == "hitch") {
    strategy = hitch_a_ride(a.bound.value_or(rs.max_period()), a.homogeneous_known);
  } else if (a.strategy == "guess") {
    if (rs.mode() != Mode::kWithIds) throw Error(ErrorCode::kNotIdMode, "guess strategy needs a route set in ids mode");
    strategy = hitch_a_guessing_ride(rs.num_sites(), a.g0);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown strategy '" + a.strategy + "'");
  }
  const CarrierId start = a.start.empty() ? parsed.start.value_or(CarrierId(0)) : resolve_carrier(rs, a.start);
  const Trace trace = run(rs, *strategy, start, g.move_limit.value_or(default_move_limit(rs)));

  if (!g.out.empty()) {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + g.out + "'");
    write_trace_csv(f, rs, trace);
  }
  const RunSummary summary = summarize(rs, trace, std::filesystem::path(a.in).stem().string(), strategy->name());
  const std::string line = to_json_line(summary);
  out << line << '\n';
  if (!a.summary.empty()) {
    std::ofstream f(a.summary, std::ios::app | std::ios::binary);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + a.summary + "'");
    f << line << '\n';
  }
  if (!trace.halted) return kMoveLimit;
  return summary.covered ? kOk : kViolation;
}

// ---- oracle -----------------------------------------------------------------

struct OracleArgs {
  std::string in;
  std::string start;
  bool skip_strategies = false;
  std::uint64_t g0 = 1;
};

int cmd_oracle(const OracleArgs& a, const Globals& g, std::ostream& out) {
  const ParsedRouteSet parsed = load(a.in);
  const RouteSet& rs = parsed.routes;
  AuditOptions options;
  options.state_cap = state_cap(g);
  options.run_strategies = !a.skip_strategies;
  options.move_limit = g.move_limit.value_or(0);
  options.initial_guess = a.g0;
  const std::optional<CarrierId> start = a.start.empty() ? parsed.start : resolve_carrier(rs, a.start);
  const BoundReport report = audit(rs, parsed.bound, start, options);
  emit(g, out, to_json(report) + "\n");
  if (report.violation()) return kViolation;
  if (!report.oracle_optimum && !report.oracle_note.empty() && report.oracle_note.starts_with("state space")) {
    return kParameterError;
  }
  return kOk;
}

// ---- bench ------------------------------------------------------------------

struct BenchArgs {
  std::string family;
  std::vector<std::size_t> n;
  std::vector<std::size_t> k;
  std::vector<std::size_t> p{0};
  std::size_t threads = 0;
  std::uint64_t g0 = 1;
  bool skip_oracle = false;
};

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t p = 0;
  std::optional<std::uint64_t> bound;
  std::optional<std::uint64_t> oracle;
  std::optional<std::uint64_t> hitch;
  std::optional<std::uint64_t> guess;
  std::string error;
};

std::string csv_field(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

BenchRow bench_row(Family family, std::size_t n, std::size_t k, std::size_t p, const BenchArgs& a, const Globals& g) {
  BenchRow row{std::string(to_string(family)), n, k, p, {}, {}, {}, {}, {}};
  try {
    const Instance inst = generate({family, n, k, p, g.seed});
    row.p = inst.routes.max_period();
    AuditOptions options;
    options.state_cap = state_cap(g);
    options.skip_oracle = a.skip_oracle;
    options.move_limit = g.move_limit.value_or(0);
    options.initial_guess = a.g0;
    const BoundReport report = audit(inst, options);
    row.bound = report.theoretical_lower_bound;
    row.oracle = report.oracle_optimum;
    row.hitch = report.strategy_moves.at("hitch");
    row.guess = report.strategy_moves.at("guess");
    if (!row.hitch || !row.guess) row.error = "strategy did not cover within the move limit";
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

int cmd_bench(const BenchArgs& a, const Globals& g, std::ostream& out) {
  const Family family = resolve_family(a.family);
  struct Cell {
    std::size_t n, k, p;
  };
  std::vector<Cell> cells;
  for (std::size_t n : a.n) {
    for (std::size_t k : a.k) {
      for (std::size_t p : a.p) cells.push_back({n, k, p});
    }
  }

  std::vector<BenchRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      rows[i] = bench_row(family, cells[i].n, cells[i].k, cells[i].p, a, g);
    }
  };
  std::size_t threads = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(cells.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << "family,n,k,p,bound,oracle,hitch_moves,guess_moves,error\n";
  for (const BenchRow& r : rows) {
    csv << r.family << ',' << r.n << ',' << r.k << ',' << r.p << ',' << csv_field(r.bound) << ','
        << csv_field(r.oracle) << ',' << csv_field(r.hitch) << ',' << csv_field(r.guess) << ','
        << csv_escape(r.error) << '\n';
  }
  emit(g, out, csv.str());
  return kOk;
}

// ---- forge ------------------------------------------------------------------

struct ForgeArgs {
  int theorem = 1;
  std::size_t n = 5;
  std::size_t k = 2;
  std::string victim;
};

ordered_json route_json(const RouteSet& rs) {
  ordered_json route = ordered_json::array();
  for (SiteId s : rs.carriers().front().route.sites()) route.push_back(rs.site_name(s));
  return route;
}

int cmd_forge(const ForgeArgs& a, const Globals& g, std::ostream& out) {
  std::optional<ForgeResult> result;
  std::string victim = a.victim;
  if (a.theorem == 1) {
    const auto victims = standard_anonymous_victims();
    for (const auto& v : victims) {
      if (victim.empty() || v.name == victim) {
        victim = v.name;
        result = forge_thm1(v.factory, a.n, a.k, g.move_limit);
        break;
      }
    }
  } else if (a.theorem == 2) {
    const auto victims = standard_id_victims();
    for (const auto& v : victims) {
      if (victim.empty() || v.name == victim) {
        victim = v.name;
        result = forge_thm2(v.factory, a.n, a.k, g.move_limit);
        break;
      }
    }
  } else {
    throw Error(ErrorCode::kInvalidArgument, "theorem must be 1 or 2");
  }
  if (!result) throw Error(ErrorCode::kInvalidArgument, "unknown victim '" + a.victim + "'");

  ordered_json j;
  j["theorem"] = a.theorem;
  j["victim"] = victim;
  j["n"] = a.n;
  j["k"] = a.k;
  j["moves_on_g"] = result->on_g.moves();
  j["g_prime_sites"] = result->g_prime.num_sites();
  j["g_prime_route"] = route_json(result->g_prime);
  j["moves_on_g_prime"] = result->on_g_prime.moves();
  j["halted_on_g_prime"] = result->on_g_prime.halted;
  j["visited_on_g_prime"] = result->on_g_prime.visited_sites.size();
  j["verdict"] = result->verdict;
  out << j.dump(2) << '\n';
  if (!g.out.empty()) emit(g, out, write_route_set(result->g_prime));
  return result->verdict ? kOk : kViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exploration of periodically varying graphs", "pvg"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for random instances");
  app.add_option("--move-limit", g.move_limit, "Maximum moves per run (default 16 k p^2)");
  app.add_option("--state-cap", g.state_cap, "Oracle state cap (default PVG_STATE_CAP or 2^22)");
  app.add_option("-o,--out", g.out, "Output file (default stdout)");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write an instance in the route-set format");
  generate_cmd->add_option("--family", gen.family, "thm3 thm4 siho sihe thm7 thm8 random")->required();
  generate_cmd->add_option("--n", gen.n, "Number of sites")->required();
  generate_cmd->add_option("--k", gen.k, "Number of carriers")->required();
  generate_cmd->add_option("--p", gen.p, "Period (thm3, thm4) or maximum period (random)");
  generate_cmd->add_flag("--emit-bound", gen.emit_bound, "Append '# bound' and '# start' comments");
  generate_cmd->add_option("--mode", gen.mode, "anonymous or ids")->check(CLI::IsMember({"anonymous", "ids"}));

  std::string validate_in;
  auto* validate_cmd = app.add_subcommand("validate", "Report structure and feasibility of a route set");
  validate_cmd->add_option("--in", validate_in, "Route-set file")->required();

  ExploreArgs ex;
  auto* explore_cmd = app.add_subcommand("explore", "Run an exploration strategy");
  explore_cmd->add_option("--in", ex.in, "Route-set file")->required();
  explore_cmd->add_option("--strategy", ex.strategy, "hitch or guess")->check(CLI::IsMember({"hitch", "guess"}));
  explore_cmd->add_option("--bound", ex.bound, "Period bound B for hitch (default: the true period)")
      ->check(CLI::PositiveNumber);
  explore_cmd->add_flag("--homogeneous-known", ex.homogeneous_known, "Ride B instead of B^2 per visit");
  explore_cmd->add_option("--g0", ex.g0, "Initial guess for guess")->check(CLI::PositiveNumber);
  explore_cmd->add_option("--start", ex.start, "Carrier to inject on");
  explore_cmd->add_option("--summary", ex.summary, "Append the JSON summary line to this file");

  OracleArgs orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum and lower-bound audit");
  oracle_cmd->add_option("--in", orc.in, "Route-set file")->required();
  oracle_cmd->add_option("--start", orc.start, "Carrier to audit from (default: '# start' or the worst start)");
  oracle_cmd->add_flag("--skip-strategies", orc.skip_strategies, "Do not run the strategies");
  oracle_cmd->add_option("--g0", orc.g0, "Initial guess for guess")->check(CLI::PositiveNumber);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Sweep a family and tabulate bounds and move counts");
  bench_cmd->add_option("--family", bench.family, "Instance family")->required();
  bench_cmd->add_option("--n", bench.n, "Site counts")->required()->delimiter(',');
  bench_cmd->add_option("--k", bench.k, "Carrier counts")->required()->delimiter(',');
  bench_cmd->add_option("--p", bench.p, "Periods, where the family takes one")->delimiter(',');
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (default: hardware)");
  bench_cmd->add_option("--g0", bench.g0, "Initial guess for guess")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--skip-oracle", bench.skip_oracle, "Leave the oracle column blank");

  ForgeArgs forge;
  auto* forge_cmd = app.add_subcommand("forge", "Counterexample construction for bound-free strategies");
  forge_cmd->add_option("--theorem", forge.theorem, "1 (anonymous) or 2 (ids)")->check(CLI::IsMember({1, 2}));
  forge_cmd->add_option("--n", forge.n, "Number of sites");
  forge_cmd->add_option("--k", forge.k, "Number of carriers");
  forge_cmd->add_option("--victim", forge.victim,
                        "fixed-step carrier-timeout ride-count | site-timeout first-repeat site-timeout-rotate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParameterError;
  }

  try {
    if (generate_cmd->parsed()) return cmd_generate(gen, g, out);
    if (validate_cmd->parsed()) return cmd_validate(validate_in, g, out);
    if (explore_cmd->parsed()) return cmd_explore(ex, g, out);
    if (oracle_cmd->parsed()) return cmd_oracle(orc, g, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, g, out);
    if (forge_cmd->parsed()) return cmd_forge(forge, g, out);
  } catch (const ParseError& e) {
    err << "pvg: " << e.what() << '\n';
    return kParseFailure;
  } catch (const Error& e) {
    err << "pvg: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kParameterError;
}

}  // namespace pvg::cli
