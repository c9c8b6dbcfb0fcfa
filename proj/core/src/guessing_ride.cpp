#include "pvg/guessing_ride.hpp"

#include "pvg/error.hpp"
#include "pvg/numeric.hpp"

namespace pvg {

GuessingRide::GuessingRide(std::size_t num_sites, std::uint64_t initial_guess)
    : num_sites_(num_sites), guess_(initial_guess), guesses_{initial_guess} {
  if (num_sites == 0) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  if (initial_guess == 0) throw Error(ErrorCode::kInvalidArgument, "initial guess must be at least 1");
}

std::optional<CarrierId> GuessingRide::first_unencountered(const Observation& obs) const {
  for (CarrierId c : obs.arriving) {
    if (!encountered_.contains(c)) return c;
  }
  return std::nullopt;
}

Action GuessingRide::decide(const Observation& obs) {
  if (!obs.site) throw Error(ErrorCode::kNotIdMode, "guessing ride needs site identities");
  if (phase_ == Phase::kDone) return Action::halt();

  if (phase_ == Phase::kStart) {
    home_ = obs.current_carrier;
    encountered_ = {*home_};
    explore(*home_);
  }
  visited_.insert(*obs.site);
  if (visited_.size() >= num_sites_) {
    phase_ = Phase::kDone;
    return Action::halt();
  }

  while (true) {
    switch (phase_) {
      case Phase::kStart:
      case Phase::kDone:
        return Action::halt();

      case Phase::kExploring: {
        if (leg_steps_ > 0) {
          if (auto fresh = first_unencountered(obs)) {
            encountered_.insert(*fresh);
            parent_[*fresh] = current_;
            explore(*fresh);
            continue;
          }
        }
        if (leg_steps_ == guess_) {
          if (current_ == *home_) {
            // Back home with sites still unseen.
            restart();
          } else {
            phase_ = Phase::kBacktracking;
            leg_steps_ = 0;
          }
          continue;
        }
        ++leg_steps_;
        return Action::ride(current_);
      }

      case Phase::kBacktracking: {
        if (leg_steps_ > 0 && first_unencountered(obs)) {
          restart();
          continue;
        }
        if (!my_parent_) {
          restart();
          continue;
        }
        if (obs.sees(*my_parent_)) {
          explore(*my_parent_);
          continue;
        }
        if (leg_steps_ == guess_) {
          restart();
          continue;
        }
        ++leg_steps_;
        return Action::ride(current_);
      }
    }
  }
}

void GuessingRide::explore(CarrierId c) {
  current_ = c;
  auto it = parent_.find(c);
  my_parent_ = it == parent_.end() ? std::nullopt : std::optional<CarrierId>(it->second);
  leg_steps_ = 0;
  phase_ = Phase::kExploring;
}

void GuessingRide::restart() {
  visited_at_restart_.push_back(visited_.size());
  guess_ = saturating_mul(guess_, 2);
  guesses_.push_back(guess_);
  home_ = current_;
  parent_.clear();
  encountered_ = {current_};
  explore(current_);
}

std::unique_ptr<Strategy> hitch_a_guessing_ride(std::size_t num_sites, std::uint64_t initial_guess) {
  return std::make_unique<GuessingRide>(num_sites, initial_guess);
}

}  // namespace pvg
