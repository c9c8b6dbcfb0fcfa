#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pvg/engine.hpp"

namespace pvg {

// Exploration of systems with site ids when only n is known. Post-order
// traversal attempts of the meeting graph, each ride leg limited to the
// current guess g. Evidence that g is too small (a new carrier or g steps
// elapsing while returning to the parent, or an incomplete traversal back at
// home) doubles g and restarts from the current carrier, keeping only the set
// of visited sites. Halts as soon as n distinct sites have been seen.
//
// Requires observations with site identity; throws Error(kNotIdMode) otherwise.
class GuessingRide final : public Strategy {
 public:
  GuessingRide(std::size_t num_sites, std::uint64_t initial_guess);

  Action decide(const Observation& obs) override;
  std::string name() const override { return "guess"; }

  std::uint64_t guess() const { return guess_; }
  // Every guess used, in order; back() == guess().
  const std::vector<std::uint64_t>& guesses() const { return guesses_; }
  const std::set<SiteId>& visited_sites() const { return visited_; }
  // |Visited| at each restart, in order.
  const std::vector<std::size_t>& visited_at_restart() const { return visited_at_restart_; }
  std::optional<CarrierId> home() const { return home_; }

 private:
  enum class Phase { kStart, kExploring, kBacktracking, kDone };

  void explore(CarrierId c);
  void restart();
  std::optional<CarrierId> first_unencountered(const Observation& obs) const;

  std::size_t num_sites_;
  std::uint64_t guess_;
  std::vector<std::uint64_t> guesses_;
  std::vector<std::size_t> visited_at_restart_;

  Phase phase_ = Phase::kStart;
  CarrierId current_;
  std::optional<CarrierId> my_parent_;
  std::uint64_t leg_steps_ = 0;

  std::optional<CarrierId> home_;
  std::map<CarrierId, CarrierId> parent_;
  std::set<CarrierId> encountered_;
  std::set<SiteId> visited_;
};

std::unique_ptr<Strategy> hitch_a_guessing_ride(std::size_t num_sites, std::uint64_t initial_guess);

}  // namespace pvg
