#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "pvg/engine.hpp"

namespace pvg {

// Halting heuristics that use no period bound. They serve as victims for the
// impossibility forges: each halts on every input, so each can be fooled.

// Rides the current carrier for a fixed number of moves, then halts.
class FixedStepHalt final : public Strategy {
 public:
  explicit FixedStepHalt(std::uint64_t steps) : steps_(steps) {}
  Action decide(const Observation& obs) override;
  std::string name() const override { return "fixed-step"; }

 private:
  std::uint64_t steps_;
  std::uint64_t taken_ = 0;
};

// Rides the current carrier and halts after `timeout` consecutive moves in
// which no previously unseen carrier id showed up.
class QuietCarrierHalt final : public Strategy {
 public:
  explicit QuietCarrierHalt(std::uint64_t timeout) : timeout_(timeout) {}
  Action decide(const Observation& obs) override;
  std::string name() const override { return "carrier-timeout"; }

 private:
  std::uint64_t timeout_;
  std::uint64_t quiet_ = 0;
  std::set<CarrierId> seen_;
};

// Performs `rides` rides of `ride_length` moves each, hopping to the next
// present carrier (cyclic by id) between rides, then halts.
class RideCountHalt final : public Strategy {
 public:
  RideCountHalt(std::uint64_t ride_length, std::uint64_t rides) : ride_length_(ride_length), rides_(rides) {}
  Action decide(const Observation& obs) override;
  std::string name() const override { return "ride-count"; }

 private:
  std::uint64_t ride_length_;
  std::uint64_t rides_;
  std::uint64_t done_rides_ = 0;
  std::uint64_t in_ride_ = 0;
  bool started_ = false;
  CarrierId riding_;
};

// Id mode: halts after `timeout` consecutive moves without a new site id. With
// `rotate`, hops to the next present carrier after every move.
class QuietSiteHalt final : public Strategy {
 public:
  QuietSiteHalt(std::uint64_t timeout, bool rotate) : timeout_(timeout), rotate_(rotate) {}
  Action decide(const Observation& obs) override;
  std::string name() const override { return rotate_ ? "site-timeout-rotate" : "site-timeout"; }

 private:
  std::uint64_t timeout_;
  bool rotate_;
  std::uint64_t quiet_ = 0;
  std::set<SiteId> seen_;
};

// Id mode: halts on the first arrival at an already visited site.
class FirstRepeatHalt final : public Strategy {
 public:
  Action decide(const Observation& obs) override;
  std::string name() const override { return "first-repeat"; }

 private:
  std::set<SiteId> seen_;
};

}  // namespace pvg
