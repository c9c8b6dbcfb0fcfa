#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "pvg/instances.hpp"
#include "pvg/route_set.hpp"

namespace pvg {

inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 22;

// PVG_STATE_CAP if set to a positive integer, else kDefaultStateCap.
std::uint64_t default_state_cap();

// k * L * 2^n with L the lcm of all periods; nullopt if it overflows 64 bits.
std::optional<std::uint64_t> state_space_size(const RouteSet& routes);

// Fewest moves of any walk from `start` at t = 0 that visits every site, or
// nullopt if none exists. Breadth-first over (carrier, t mod L, visited).
// Throws Error(kStateSpaceTooLarge) when the state space exceeds `cap`.
std::optional<std::uint64_t> min_moves(const RouteSet& routes, CarrierId start,
                                       std::uint64_t cap = default_state_cap());

// min_moves is finite from every carrier.
bool exact_feasible(const RouteSet& routes, std::uint64_t cap = default_state_cap());

struct AuditOptions {
  std::uint64_t state_cap = default_state_cap();
  bool skip_oracle = false;
  bool run_strategies = true;
  std::uint64_t move_limit = 0;  // 0: default_move_limit
  std::uint64_t initial_guess = 1;
};

struct BoundReport {
  std::string family;  // empty for route sets read from a file
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t p = 0;
  bool homogeneous = false;
  std::string start;
  bool start_is_worst = false;  // no start was given: `start` is one maximizing the optimum
  std::optional<std::uint64_t> theoretical_lower_bound;
  std::optional<std::uint64_t> oracle_optimum;          // from `start`
  std::optional<std::uint64_t> oracle_max_over_starts;
  std::string oracle_note;                              // why the oracle value is absent
  std::map<std::string, std::optional<std::uint64_t>> strategy_moves;  // absent: no full cover

  // theoretical_lower_bound <= oracle_optimum, when both are known.
  bool bound_sound() const;
  // No strategy beat the oracle from the same start.
  bool oracle_consistent() const;
  bool violation() const { return !bound_sound() || !oracle_consistent(); }
};

// Without a start, the audit uses a start whose optimum is largest (the
// first carrier if the oracle is skipped).
BoundReport audit(const RouteSet& routes, std::optional<std::uint64_t> bound, std::optional<CarrierId> start,
                  const AuditOptions& options = {}, std::string family = {});
BoundReport audit(const Instance& instance, const AuditOptions& options = {});

// Pretty-printed JSON object.
std::string to_json(const BoundReport& report);

}  // namespace pvg
