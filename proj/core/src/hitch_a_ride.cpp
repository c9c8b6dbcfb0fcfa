#include "pvg/hitch_a_ride.hpp"

#include "pvg/error.hpp"
#include "pvg/numeric.hpp"

namespace pvg {

void EncounterLog::record(const Observation& obs) {
  for (CarrierId c : obs.arriving) {
    if (c != obs.current_carrier) carriers_.insert(c);
  }
}

HitchARide::HitchARide(std::uint64_t bound, bool homogeneous_known)
    : bound_(bound), ride_length_(homogeneous_known ? bound : saturating_mul(bound, bound)) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "period bound B must be at least 1");
}

const std::set<CarrierId>& HitchARide::neighbors(CarrierId c) const {
  static const std::set<CarrierId> kEmpty;
  auto it = neighbors_.find(c);
  return it == neighbors_.end() ? kEmpty : it->second.carriers();
}

Action HitchARide::decide(const Observation& obs) {
  if (phase_ == Phase::kStart) {
    home_ = obs.current_carrier;
    encounters_ = {*home_};
    enter(*home_);
  }

  while (true) {
    switch (phase_) {
      case Phase::kStart:
      case Phase::kDone:
        return Action::halt();

      case Phase::kVisiting: {
        auto& log = neighbors_[current_];
        log.record(obs);
        for (CarrierId c : obs.arriving) {
          if (c != current_ && !visited_.contains(c)) encounters_.insert(c);
        }
        if (remaining_ == 0) {
          finish_visit();
          go_to_next();
          continue;
        }
        --remaining_;
        return Action::ride(current_);
      }

      case Phase::kSeekChild: {
        const auto& mine = neighbors(current_);
        // Several pending neighbours may arrive together: take the smallest id.
        std::optional<CarrierId> next;
        for (CarrierId c : obs.arriving) {
          if (mine.contains(c) && encounters_.contains(c)) {
            next = c;
            break;
          }
        }
        if (!next) return Action::ride(current_);
        parent_[*next] = current_;
        enter(*next);
        continue;
      }

      case Phase::kSeekParent: {
        const CarrierId up = parent_.at(current_);
        if (!obs.sees(up)) return Action::ride(current_);
        enter(up);
        continue;
      }

      case Phase::kStranded:
        return Action::ride(current_);
    }
  }
}

void HitchARide::enter(CarrierId c) {
  current_ = c;
  if (c == *home_ && encounters_.empty()) {
    phase_ = Phase::kDone;
    return;
  }
  if (!visited_.contains(c)) {
    EncounterLog log;
    // N(c) starts as {parent(c)}.
    if (auto it = parent_.find(c); it != parent_.end()) log.add(it->second);
    neighbors_[c] = std::move(log);
    remaining_ = ride_length_;
    phase_ = Phase::kVisiting;
    return;
  }
  go_to_next();
}

void HitchARide::finish_visit() {
  visited_.insert(current_);
  encounters_.erase(current_);
}

void HitchARide::go_to_next() {
  for (CarrierId c : neighbors(current_)) {
    if (encounters_.contains(c)) {
      phase_ = Phase::kSeekChild;
      return;
    }
  }
  if (current_ == *home_) {
    // Home has no parent to ride back to: the traversal is complete here.
    if (encounters_.empty()) {
      phase_ = Phase::kDone;
    } else {
      phase_ = Phase::kStranded;
    }
    return;
  }
  phase_ = Phase::kSeekParent;
}

std::unique_ptr<Strategy> hitch_a_ride(std::uint64_t bound, bool homogeneous_known) {
  return std::make_unique<HitchARide>(bound, homogeneous_known);
}

std::set<CarrierId> observed_while_riding(const RouteSet& routes, CarrierId c, Time t0, std::uint64_t steps) {
  EncounterLog log;
  for (std::uint64_t i = 0; i <= steps; ++i) log.record(observe(routes, c, t0 + i));
  return log.carriers();
}

}  // namespace pvg
