#include "pvg/naive_strategies.hpp"

#include <algorithm>

#include "pvg/error.hpp"

namespace pvg {
namespace {

CarrierId next_present(const Observation& obs, CarrierId after) {
  auto it = std::upper_bound(obs.arriving.begin(), obs.arriving.end(), after);
  return it == obs.arriving.end() ? obs.arriving.front() : *it;
}

SiteId require_site(const Observation& obs) {
  if (!obs.site) throw Error(ErrorCode::kNotIdMode, "strategy needs site identities");
  return *obs.site;
}

}  // namespace

Action FixedStepHalt::decide(const Observation& obs) {
  if (taken_ >= steps_) return Action::halt();
  ++taken_;
  return Action::ride(obs.current_carrier);
}

Action QuietCarrierHalt::decide(const Observation& obs) {
  bool fresh = false;
  for (CarrierId c : obs.arriving) fresh |= seen_.insert(c).second;
  quiet_ = fresh ? 0 : quiet_ + 1;
  if (quiet_ >= timeout_) return Action::halt();
  return Action::ride(obs.current_carrier);
}

Action RideCountHalt::decide(const Observation& obs) {
  if (!started_) {
    started_ = true;
    riding_ = obs.current_carrier;
  }
  if (in_ride_ == ride_length_) {
    in_ride_ = 0;
    ++done_rides_;
    riding_ = next_present(obs, riding_);
  }
  if (done_rides_ >= rides_) return Action::halt();
  ++in_ride_;
  return Action::ride(riding_);
}

Action QuietSiteHalt::decide(const Observation& obs) {
  const bool fresh = seen_.insert(require_site(obs)).second;
  quiet_ = fresh ? 0 : quiet_ + 1;
  if (quiet_ >= timeout_) return Action::halt();
  return Action::ride(rotate_ ? next_present(obs, obs.current_carrier) : obs.current_carrier);
}

Action FirstRepeatHalt::decide(const Observation& obs) {
  if (!seen_.insert(require_site(obs)).second) return Action::halt();
  return Action::ride(obs.current_carrier);
}

}  // namespace pvg
