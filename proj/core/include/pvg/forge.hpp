#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pvg/engine.hpp"
#include "pvg/route_set.hpp"

namespace pvg {

// Builds a fresh strategy told (n, k) but no period bound.
using AnonymousFactory = std::function<std::unique_ptr<Strategy>(std::size_t n, std::size_t k)>;
// Builds a fresh id-mode strategy told only k.
using IdFactory = std::function<std::unique_ptr<Strategy>(std::size_t k)>;

struct AnonymousVictim {
  std::string name;
  AnonymousFactory factory;
};
struct IdVictim {
  std::string name;
  IdFactory factory;
};

// fixed-step (n-1 moves), carrier-timeout (n quiet moves), ride-count
// (k rides of ceil(n/k) moves).
std::vector<AnonymousVictim> standard_anonymous_victims();
// site-timeout (k quiet moves), first-repeat, site-timeout-rotate (2k quiet
// moves, hopping carriers).
std::vector<IdVictim> standard_id_victims();

struct ForgeResult {
  RouteSet g;
  RouteSet g_prime;
  Trace on_g;
  Trace on_g_prime;
  // True iff the strategy halted on g_prime without covering it.
  bool verdict = false;
};

// Anonymous systems without a period bound. G is k copies of <x_0..x_{n-1}>;
// the halting walk on G is spliced into <alpha, gamma, beta> where gamma is
// beta with the last first-visited site replaced by the one before it. If the
// walk on G already misses a site, G itself is the counterexample.
// n >= 3. Throws Error(kStrategyDidNotHalt) if the strategy does not halt on G
// within `move_limit` (default: default_move_limit(G)).
ForgeResult forge_thm1(const AnonymousFactory& factory, std::size_t n, std::size_t k,
                       std::optional<std::uint64_t> move_limit = std::nullopt);

// Id systems without n or a period bound. G is k copies of <x_0..x_{n-1}>;
// G' has n+1 sites and route <walk on G, x_n>.
ForgeResult forge_thm2(const IdFactory& factory, std::size_t n, std::size_t k,
                       std::optional<std::uint64_t> move_limit = std::nullopt);

}  // namespace pvg
