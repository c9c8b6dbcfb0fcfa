#pragma once

#include <cstddef>
#include <vector>

#include "pvg/route_set.hpp"

namespace pvg {

// One move: during [time, time + 1) the agent rides `carrier` from `from` to `to`.
struct Step {
  Time time;
  CarrierId carrier;
  SiteId from;
  SiteId to;

  friend bool operator==(const Step&, const Step&) = default;
};

// The executed concrete walk of one run.
struct Trace {
  CarrierId start_carrier;
  std::vector<Step> steps;
  bool halted = false;                // false: the run hit its move limit
  std::vector<SiteId> visited_sites;  // first-visit order, injection site first

  std::size_t moves() const { return steps.size(); }

  friend bool operator==(const Trace&, const Trace&) = default;
};

// True iff the walk touches every site. Throws Error(kInconsistentWalk) if a
// step is not activated by its carrier at its time or breaks continuity.
bool is_concrete_cover(const RouteSet& routes, const Trace& walk);

}  // namespace pvg
