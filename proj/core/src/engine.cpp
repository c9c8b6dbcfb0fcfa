#include "pvg/engine.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"
#include "pvg/error.hpp"
#include "pvg/numeric.hpp"

namespace pvg {

bool Observation::sees(CarrierId c) const { return std::binary_search(arriving.begin(), arriving.end(), c); }

Observation observe(const RouteSet& routes, CarrierId current, Time t) {
  const SiteId here = position(routes.carrier(current), t);
  Observation obs;
  obs.time = t;
  obs.current_carrier = current;
  obs.arriving = carriers_at(routes, t, here);
  if (routes.mode() == Mode::kWithIds) obs.site = here;
  return obs;
}

std::uint64_t default_move_limit(const RouteSet& routes) {
  const std::uint64_t p = routes.max_period();
  return saturating_mul(saturating_mul(16, routes.num_carriers()), saturating_mul(p, p));
}

Trace run(const RouteSet& routes, Strategy& strategy, CarrierId start, std::uint64_t move_limit) {
  if (start.index() >= routes.num_carriers()) throw Error(ErrorCode::kInvalidArgument, "unknown start carrier");
  if (move_limit == 0) throw Error(ErrorCode::kInvalidArgument, "move limit must be positive");

  Trace trace;
  trace.start_carrier = start;
  std::vector<bool> seen(routes.num_sites(), false);
  const SiteId origin = position(routes.carrier(start), 0);
  seen[origin.index()] = true;
  trace.visited_sites.push_back(origin);

  CarrierId current = start;
  for (Time t = 0;; ++t) {
    const Observation obs = observe(routes, current, t);
    const Action action = strategy.decide(obs);
    if (action.is_halt()) {
      trace.halted = true;
      break;
    }
    if (!obs.sees(action.carrier())) {
      throw Error(ErrorCode::kIllegalAction, "strategy '" + strategy.name() + "' boarded carrier " +
                                                 std::to_string(action.carrier().index()) + " which is not at the site at t=" +
                                                 std::to_string(t));
    }
    if (trace.steps.size() >= move_limit) break;

    const Carrier& c = routes.carrier(action.carrier());
    const Step step{t, c.id, position(c, t), position(c, t + 1)};
    trace.steps.push_back(step);
    if (!seen[step.to.index()]) {
      seen[step.to.index()] = true;
      trace.visited_sites.push_back(step.to);
    }
    current = c.id;
  }
  return trace;
}

ReplayReport replay_check(const RouteSet& routes, const Trace& trace) {
  const auto bad = [](std::size_t i, std::string why) { return ReplayReport{false, i, std::move(why)}; };
  if (trace.start_carrier.index() >= routes.num_carriers()) return bad(0, "unknown start carrier");

  SiteId here = position(routes.carrier(trace.start_carrier), 0);
  CarrierId aboard = trace.start_carrier;
  std::vector<bool> seen(routes.num_sites(), false);
  std::vector<SiteId> first_visits{here};
  seen[here.index()] = true;

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Step& s = trace.steps[i];
    if (s.time != i) return bad(i, "time is not consecutive");
    if (s.carrier.index() >= routes.num_carriers()) return bad(i, "unknown carrier");
    const Carrier& c = routes.carrier(s.carrier);
    // Switching requires both carriers at the agent's site at this time.
    if (s.carrier != aboard && position(routes.carrier(aboard), s.time) != position(c, s.time))
      return bad(i, "switch to a carrier that is not present");
    if (s.from != here || position(c, s.time) != s.from) return bad(i, "departure site mismatch");
    if (position(c, s.time + 1) != s.to) return bad(i, "edge not activated by carrier");
    here = s.to;
    aboard = s.carrier;
    if (!seen[here.index()]) {
      seen[here.index()] = true;
      first_visits.push_back(here);
    }
  }
  if (first_visits != trace.visited_sites) return bad(trace.steps.size(), "visited list does not match steps");
  return {};
}

void write_trace_csv(std::ostream& out, const RouteSet& routes, const Trace& trace) {
  out << "step,time,carrier,from,to,new_site\n";
  std::vector<bool> seen(routes.num_sites(), false);
  seen[position(routes.carrier(trace.start_carrier), 0).index()] = true;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Step& s = trace.steps[i];
    const bool fresh = !seen[s.to.index()];
    seen[s.to.index()] = true;
    out << i << ',' << s.time << ',' << routes.carrier(s.carrier).name << ',' << routes.site_name(s.from) << ','
        << routes.site_name(s.to) << ',' << (fresh ? 1 : 0) << '\n';
  }
}

RunSummary summarize(const RouteSet& routes, const Trace& trace, std::string instance, std::string strategy) {
  RunSummary s;
  s.instance = std::move(instance);
  s.strategy = std::move(strategy);
  s.k = routes.num_carriers();
  s.n = routes.num_sites();
  s.p = routes.max_period();
  s.moves = trace.moves();
  s.halted = trace.halted;
  s.covered = is_concrete_cover(routes, trace);
  return s;
}

std::string to_json_line(const RunSummary& summary) {
  nlohmann::ordered_json j;
  j["instance"] = summary.instance;
  j["strategy"] = summary.strategy;
  j["k"] = summary.k;
  j["n"] = summary.n;
  j["p"] = summary.p;
  j["moves"] = summary.moves;
  j["halted"] = summary.halted;
  j["covered"] = summary.covered;
  return j.dump();
}

}  // namespace pvg
