#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "pvg/engine.hpp"

namespace pvg {

// Carriers observed, other than the one being ridden, over a run of
// observations.
class EncounterLog {
 public:
  void record(const Observation& obs);
  void add(CarrierId c) { carriers_.insert(c); }
  const std::set<CarrierId>& carriers() const { return carriers_; }

 private:
  std::set<CarrierId> carriers_;
};

// Anonymous exploration with a known period bound B: a pre-order traversal of
// a spanning tree of the meeting graph. Visiting a carrier means riding it for
// B' = B (homogeneous known) or B^2 time units while recording everyone met;
// the agent then rides on until it meets an unvisited neighbour (descend) or
// its parent (return). Halts back at the home carrier once no encountered
// carrier is left unvisited.
class HitchARide final : public Strategy {
 public:
  HitchARide(std::uint64_t bound, bool homogeneous_known);

  Action decide(const Observation& obs) override;
  std::string name() const override { return "hitch"; }

  std::uint64_t bound() const { return bound_; }
  std::uint64_t ride_length() const { return ride_length_; }

  std::optional<CarrierId> home() const { return home_; }
  const std::set<CarrierId>& visited() const { return visited_; }
  const std::set<CarrierId>& encounters() const { return encounters_; }
  const std::map<CarrierId, CarrierId>& parents() const { return parent_; }
  // N(c) as recorded by the visit of c (includes the parent). Empty if unvisited.
  const std::set<CarrierId>& neighbors(CarrierId c) const;

 private:
  enum class Phase { kStart, kVisiting, kSeekChild, kSeekParent, kStranded, kDone };

  void enter(CarrierId c);
  void go_to_next();
  void finish_visit();

  std::uint64_t bound_;
  std::uint64_t ride_length_;
  Phase phase_ = Phase::kStart;
  CarrierId current_;
  std::uint64_t remaining_ = 0;

  std::optional<CarrierId> home_;
  std::set<CarrierId> visited_;
  std::set<CarrierId> encounters_;
  std::map<CarrierId, CarrierId> parent_;
  std::map<CarrierId, EncounterLog> neighbors_;
};

std::unique_ptr<Strategy> hitch_a_ride(std::uint64_t bound, bool homogeneous_known);

// Carriers other than c seen by an agent aboard c at times t0..t0+steps.
std::set<CarrierId> observed_while_riding(const RouteSet& routes, CarrierId c, Time t0, std::uint64_t steps);

}  // namespace pvg
