#include "pvg/trace.hpp"

#include <algorithm>
#include <string>

#include "pvg/error.hpp"

namespace pvg {

bool is_concrete_cover(const RouteSet& routes, const Trace& walk) {
  if (walk.start_carrier.index() >= routes.num_carriers())
    throw Error(ErrorCode::kInconsistentWalk, "unknown start carrier");

  std::vector<bool> seen(routes.num_sites(), false);
  SiteId here = position(routes.carrier(walk.start_carrier), 0);
  seen[here.index()] = true;

  for (std::size_t i = 0; i < walk.steps.size(); ++i) {
    const Step& s = walk.steps[i];
    const auto where = " at step " + std::to_string(i);
    if (s.carrier.index() >= routes.num_carriers()) throw Error(ErrorCode::kInconsistentWalk, "unknown carrier" + where);
    const Carrier& c = routes.carrier(s.carrier);
    if (s.time != i) throw Error(ErrorCode::kInconsistentWalk, "time is not consecutive" + where);
    if (s.from != here) throw Error(ErrorCode::kInconsistentWalk, "walk is discontinuous" + where);
    if (position(c, s.time) != s.from || position(c, s.time + 1) != s.to)
      throw Error(ErrorCode::kInconsistentWalk, "edge not activated by '" + c.name + "'" + where);
    here = s.to;
    seen[here.index()] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace pvg
