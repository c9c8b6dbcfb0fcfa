#include "pvg/oracle.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"
#include "pvg/engine.hpp"
#include "pvg/error.hpp"
#include "pvg/guessing_ride.hpp"
#include "pvg/hitch_a_ride.hpp"
#include "pvg/numeric.hpp"

namespace pvg {
namespace {

std::optional<std::uint64_t> global_lcm(const RouteSet& routes) {
  std::uint64_t l = 1;
  for (const Carrier& c : routes.carriers()) {
    auto next = checked_lcm(l, c.route.period());
    if (!next) return std::nullopt;
    l = *next;
  }
  return l;
}

// Transition tables for the product search. Everything is indexed by
// carrier * L + phase.
struct Tables {
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t lcm = 1;
  std::vector<std::uint64_t> site_bit;            // bit of position(c, phase)
  std::vector<std::vector<std::uint32_t>> boards;  // carriers present alongside c at phase

  std::size_t slot(std::size_t c, std::uint64_t phase) const { return c * lcm + phase; }
};

Tables build_tables(const RouteSet& routes, std::uint64_t lcm) {
  Tables t;
  t.k = routes.num_carriers();
  t.n = routes.num_sites();
  t.lcm = lcm;
  t.site_bit.resize(t.k * lcm);
  t.boards.resize(t.k * lcm);
  std::vector<std::vector<std::uint32_t>> at_site(t.n);
  for (std::uint64_t ph = 0; ph < lcm; ++ph) {
    for (auto& v : at_site) v.clear();
    for (std::size_t c = 0; c < t.k; ++c) {
      const SiteId s = position(routes.carriers()[c], ph);
      t.site_bit[t.slot(c, ph)] = std::uint64_t{1} << s.index();
      at_site[s.index()].push_back(static_cast<std::uint32_t>(c));
    }
    for (std::size_t c = 0; c < t.k; ++c) {
      const SiteId s = position(routes.carriers()[c], ph);
      t.boards[t.slot(c, ph)] = at_site[s.index()];
    }
  }
  return t;
}

std::uint64_t checked_state_space(const RouteSet& routes, std::uint64_t cap) {
  const auto size = state_space_size(routes);
  if (!size || *size > cap) {
    throw Error(ErrorCode::kStateSpaceTooLarge,
                "state space " + (size ? std::to_string(*size) : std::string("> 2^64")) + " exceeds cap " +
                    std::to_string(cap));
  }
  return *size;
}

std::optional<std::uint64_t> search(const Tables& t, std::size_t start) {
  const std::uint64_t full = t.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t.n) - 1;
  const std::uint64_t masks = std::uint64_t{1} << t.n;
  std::vector<std::uint64_t> seen((t.k * t.lcm * masks + 63) / 64, 0);
  auto mark = [&](std::size_t c, std::uint64_t phase, std::uint64_t mask) {
    const std::uint64_t idx = t.slot(c, phase) * masks + mask;
    std::uint64_t& word = seen[idx / 64];
    const std::uint64_t bit = std::uint64_t{1} << (idx % 64);
    if (word & bit) return false;
    word |= bit;
    return true;
  };

  struct Node {
    std::uint32_t carrier;
    std::uint64_t mask;
  };
  const std::uint64_t start_mask = t.site_bit[t.slot(start, 0)];
  if (start_mask == full) return 0;
  std::vector<Node> frontier{{static_cast<std::uint32_t>(start), start_mask}};
  std::vector<Node> next;
  mark(start, 0, start_mask);

  // Every move advances time by one, so level d sits at phase d mod L.
  for (std::uint64_t depth = 0; !frontier.empty(); ++depth) {
    const std::uint64_t phase = depth % t.lcm;
    const std::uint64_t after = (depth + 1) % t.lcm;
    next.clear();
    for (const Node& node : frontier) {
      for (std::uint32_t c : t.boards[t.slot(node.carrier, phase)]) {
        const std::uint64_t mask = node.mask | t.site_bit[t.slot(c, after)];
        if (mask == full) return depth + 1;
        if (mark(c, after, mask)) next.push_back({c, mask});
      }
    }
    frontier.swap(next);
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t default_state_cap() {
  if (const char* env = std::getenv("PVG_STATE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultStateCap;
}

std::optional<std::uint64_t> state_space_size(const RouteSet& routes) {
  if (routes.num_sites() >= 64) return std::nullopt;
  const auto lcm = global_lcm(routes);
  if (!lcm) return std::nullopt;
  std::uint64_t size = 0;
  if (__builtin_mul_overflow(static_cast<std::uint64_t>(routes.num_carriers()), *lcm, &size)) return std::nullopt;
  if (__builtin_mul_overflow(size, std::uint64_t{1} << routes.num_sites(), &size)) return std::nullopt;
  return size;
}

std::optional<std::uint64_t> min_moves(const RouteSet& routes, CarrierId start, std::uint64_t cap) {
  if (start.index() >= routes.num_carriers()) throw Error(ErrorCode::kInvalidArgument, "start carrier out of range");
  checked_state_space(routes, cap);
  const Tables t = build_tables(routes, *global_lcm(routes));
  return search(t, start.index());
}

bool exact_feasible(const RouteSet& routes, std::uint64_t cap) {
  checked_state_space(routes, cap);
  const Tables t = build_tables(routes, *global_lcm(routes));
  for (std::size_t c = 0; c < t.k; ++c) {
    if (!search(t, c)) return false;
  }
  return true;
}

bool BoundReport::bound_sound() const {
  return !theoretical_lower_bound || !oracle_optimum || *theoretical_lower_bound <= *oracle_optimum;
}

bool BoundReport::oracle_consistent() const {
  if (!oracle_optimum) return true;
  for (const auto& [name, moves] : strategy_moves) {
    if (moves && *moves < *oracle_optimum) return false;
  }
  return true;
}

BoundReport audit(const RouteSet& routes, std::optional<std::uint64_t> bound, std::optional<CarrierId> start_opt,
                  const AuditOptions& options, std::string family) {
  BoundReport r;
  r.family = std::move(family);
  r.n = routes.num_sites();
  r.k = routes.num_carriers();
  r.p = routes.max_period();
  r.homogeneous = is_homogeneous(routes);
  r.start_is_worst = !start_opt;
  r.theoretical_lower_bound = bound;
  CarrierId start = start_opt.value_or(CarrierId(0));

  if (options.skip_oracle) {
    r.oracle_note = "skipped";
  } else {
    const auto size = state_space_size(routes);
    if (!size || *size > options.state_cap) {
      r.oracle_note = "state space " + (size ? std::to_string(*size) : std::string("> 2^64")) + " exceeds cap " +
                      std::to_string(options.state_cap);
    } else {
      const Tables t = build_tables(routes, *global_lcm(routes));
      std::vector<std::optional<std::uint64_t>> per_start(t.k);
      bool all_finite = true;
      std::uint64_t worst = 0;
      for (std::size_t c = 0; c < t.k; ++c) {
        per_start[c] = search(t, c);
        if (!per_start[c]) {
          all_finite = false;
        } else if (*per_start[c] > worst) {
          worst = *per_start[c];
          if (!start_opt) start = CarrierId(c);
        }
      }
      if (all_finite) r.oracle_max_over_starts = worst;
      if (!start_opt && !all_finite) {
        for (std::size_t c = 0; c < t.k; ++c) {
          if (!per_start[c]) {
            start = CarrierId(c);
            break;
          }
        }
      }
      r.oracle_optimum = per_start[start.index()];
      if (!r.oracle_optimum) r.oracle_note = "no cover from start";
      else if (!all_finite) r.oracle_note = "no cover from some start";
    }
  }
  r.start = routes.carrier(start).name;

  if (options.run_strategies) {
    const std::uint64_t limit = options.move_limit ? options.move_limit : default_move_limit(routes);
    auto covered_moves = [&](const RouteSet& rs, Strategy& s) -> std::optional<std::uint64_t> {
      const Trace tr = run(rs, s, start, limit);
      if (!tr.halted || tr.visited_sites.size() != rs.num_sites()) return std::nullopt;
      return tr.moves();
    };
    HitchARide hitch(routes.max_period(), r.homogeneous);
    r.strategy_moves["hitch"] = covered_moves(routes, hitch);
    const RouteSet with_ids = routes.with_mode(Mode::kWithIds);
    GuessingRide guess(routes.num_sites(), options.initial_guess);
    r.strategy_moves["guess"] = covered_moves(with_ids, guess);
  }
  return r;
}

BoundReport audit(const Instance& instance, const AuditOptions& options) {
  return audit(instance.routes, instance.lower_bound, instance.designated_start, options,
               std::string(to_string(instance.spec.family)));
}

std::string to_json(const BoundReport& r) {
  auto opt = [](const std::optional<std::uint64_t>& v) -> nlohmann::ordered_json {
    if (v) return *v;
    return nullptr;
  };
  nlohmann::ordered_json j;
  j["family"] = r.family.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.family);
  j["n"] = r.n;
  j["k"] = r.k;
  j["p"] = r.p;
  j["homogeneous"] = r.homogeneous;
  j["start"] = r.start;
  j["start_rule"] = r.start_is_worst ? "worst" : "given";
  j["theoretical_lower_bound"] = opt(r.theoretical_lower_bound);
  j["oracle_optimum"] = opt(r.oracle_optimum);
  j["oracle_max_over_starts"] = opt(r.oracle_max_over_starts);
  if (!r.oracle_note.empty()) j["oracle_note"] = r.oracle_note;
  nlohmann::ordered_json moves = nlohmann::ordered_json::object();
  for (const auto& [name, m] : r.strategy_moves) moves[name] = opt(m);
  j["strategy_moves"] = moves;
  j["bound_sound"] = r.bound_sound();
  j["oracle_consistent"] = r.oracle_consistent();
  j["violation"] = r.violation();
  return j.dump(2);
}

}  // namespace pvg
