#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pvg/route_set.hpp"
#include "pvg/trace.hpp"

namespace pvg {

// What the agent perceives at time t while aboard `current_carrier`.
// `site` is empty in anonymous systems: a strategy has no way to read it.
struct Observation {
  Time time = 0;
  CarrierId current_carrier;
  std::vector<CarrierId> arriving;  // C(t, x), ascending; contains current_carrier
  std::optional<SiteId> site;

  bool sees(CarrierId c) const;
};

class Action {
 public:
  static Action ride(CarrierId c) { return Action(c); }
  static Action halt() { return Action(); }

  bool is_halt() const { return !carrier_.has_value(); }
  CarrierId carrier() const { return *carrier_; }

 private:
  Action() = default;
  explicit Action(CarrierId c) : carrier_(c) {}
  std::optional<CarrierId> carrier_;
};

// An exploration protocol. Instances are single-use and may keep arbitrary
// state between calls; decide() must be a deterministic function of the
// observation sequence.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual Action decide(const Observation& obs) = 0;
  virtual std::string name() const = 0;
};

Observation observe(const RouteSet& routes, CarrierId current, Time t);

// 16 * k * p^2, above every proved upper bound for both algorithms.
std::uint64_t default_move_limit(const RouteSet& routes);

// Injects the agent aboard `start` at its starting site at t = 0 and steps
// until Halt or `move_limit` moves. A run that reaches the limit without
// halting returns its partial trace with halted == false. Throws
// Error(kIllegalAction) if the strategy boards a carrier that is not present.
Trace run(const RouteSet& routes, Strategy& strategy, CarrierId start, std::uint64_t move_limit);

struct ReplayReport {
  bool ok = true;
  std::optional<std::size_t> first_bad_step;  // index into steps, or steps.size() for summary fields
  std::string reason;
};

// Re-validates a trace against the routes without trusting the engine.
ReplayReport replay_check(const RouteSet& routes, const Trace& trace);

// CSV export: header `step,time,carrier,from,to,new_site`, one row per move.
void write_trace_csv(std::ostream& out, const RouteSet& routes, const Trace& trace);

struct RunSummary {
  std::string instance;
  std::string strategy;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t moves = 0;
  bool halted = false;
  bool covered = false;
};

RunSummary summarize(const RouteSet& routes, const Trace& trace, std::string instance, std::string strategy);
// One JSON object; keys in the order instance,strategy,k,n,p,moves,halted,covered.
std::string to_json_line(const RunSummary& summary);

}  // namespace pvg
