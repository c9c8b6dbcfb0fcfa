#include "pvg/forge.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "pvg/error.hpp"
#include "pvg/naive_strategies.hpp"

namespace pvg {
namespace {

RouteSet copies(std::size_t n, std::size_t k, const std::vector<std::uint32_t>& route, Mode mode) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<CarrierSpec> carriers;
  for (std::size_t c = 0; c < k; ++c) {
    CarrierSpec spec{"c" + std::to_string(c), {}};
    for (auto s : route) spec.sites.emplace_back(s);
    carriers.push_back(std::move(spec));
  }
  return RouteSet(std::move(names), std::move(carriers), mode);
}

std::vector<std::uint32_t> iota_route(std::size_t n) {
  std::vector<std::uint32_t> route(n);
  for (std::size_t i = 0; i < n; ++i) route[i] = static_cast<std::uint32_t>(i);
  return route;
}

// Site sequence a_0, a_1, ..., a_m of a walk.
std::vector<std::uint32_t> node_sequence(const RouteSet& routes, const Trace& trace) {
  std::vector<std::uint32_t> seq{routes.carrier(trace.start_carrier).route.start().value};
  for (const Step& s : trace.steps) seq.push_back(s.to.value);
  return seq;
}

Trace run_halting(const RouteSet& routes, Strategy& strategy, std::optional<std::uint64_t> limit) {
  Trace t = run(routes, strategy, CarrierId(0), limit.value_or(default_move_limit(routes)));
  if (!t.halted) {
    throw Error(ErrorCode::kStrategyDidNotHalt,
                strategy.name() + " did not halt within " + std::to_string(t.moves()) + " moves");
  }
  return t;
}

ForgeResult finish(RouteSet g, Trace on_g, RouteSet g_prime, Strategy& second, std::optional<std::uint64_t> limit) {
  Trace on_prime = run(g_prime, second, CarrierId(0), limit.value_or(default_move_limit(g_prime)));
  const bool fooled = on_prime.halted && on_prime.visited_sites.size() < g_prime.num_sites();
  return ForgeResult{std::move(g), std::move(g_prime), std::move(on_g), std::move(on_prime), fooled};
}

}  // namespace

std::vector<AnonymousVictim> standard_anonymous_victims() {
  return {
      {"fixed-step", [](std::size_t n, std::size_t) { return std::make_unique<FixedStepHalt>(n - 1); }},
      {"carrier-timeout", [](std::size_t n, std::size_t) { return std::make_unique<QuietCarrierHalt>(n); }},
      {"ride-count",
       [](std::size_t n, std::size_t k) { return std::make_unique<RideCountHalt>((n + k - 1) / k, k); }},
  };
}

std::vector<IdVictim> standard_id_victims() {
  return {
      {"site-timeout", [](std::size_t k) { return std::make_unique<QuietSiteHalt>(k, false); }},
      {"first-repeat", [](std::size_t) { return std::make_unique<FirstRepeatHalt>(); }},
      {"site-timeout-rotate", [](std::size_t k) { return std::make_unique<QuietSiteHalt>(2 * k, true); }},
  };
}

ForgeResult forge_thm1(const AnonymousFactory& factory, std::size_t n, std::size_t k,
                       std::optional<std::uint64_t> move_limit) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "forge_thm1 needs n >= 3");
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "forge_thm1 needs k >= 1");

  RouteSet g = copies(n, k, iota_route(n), Mode::kAnonymous);
  auto first = factory(n, k);
  Trace on_g = run_halting(g, *first, move_limit);

  auto second = factory(n, k);
  if (on_g.visited_sites.size() < n) {
    RouteSet same = g;
    return finish(std::move(g), std::move(on_g), std::move(same), *second, move_limit);
  }

  const std::vector<std::uint32_t> walk = node_sequence(g, on_g);
  const std::uint32_t penultimate = on_g.visited_sites[n - 2].value;
  const std::uint32_t last = on_g.visited_sites[n - 1].value;
  const auto split = static_cast<std::size_t>(std::find(walk.begin(), walk.end(), penultimate) - walk.begin()) + 1;

  const std::vector<std::uint32_t> alpha(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(split));
  const std::vector<std::uint32_t> beta(walk.begin() + static_cast<std::ptrdiff_t>(split), walk.end());
  std::vector<std::uint32_t> gamma = beta;
  std::replace(gamma.begin(), gamma.end(), last, penultimate);

  std::vector<std::uint32_t> spliced = alpha;
  spliced.insert(spliced.end(), gamma.begin(), gamma.end());
  spliced.insert(spliced.end(), beta.begin(), beta.end());
  RouteSet g_prime = copies(n, k, spliced, Mode::kAnonymous);

  return finish(std::move(g), std::move(on_g), std::move(g_prime), *second, move_limit);
}

ForgeResult forge_thm2(const IdFactory& factory, std::size_t n, std::size_t k,
                       std::optional<std::uint64_t> move_limit) {
  if (n < 1 || k < 1) throw Error(ErrorCode::kInvalidArgument, "forge_thm2 needs n, k >= 1");

  RouteSet g = copies(n, k, iota_route(n), Mode::kWithIds);
  auto first = factory(k);
  Trace on_g = run_halting(g, *first, move_limit);

  auto second = factory(k);
  if (on_g.visited_sites.size() < n) {
    RouteSet same = g;
    return finish(std::move(g), std::move(on_g), std::move(same), *second, move_limit);
  }

  std::vector<std::uint32_t> extended = node_sequence(g, on_g);
  extended.push_back(static_cast<std::uint32_t>(n));
  RouteSet g_prime = copies(n + 1, k, extended, Mode::kWithIds);
  return finish(std::move(g), std::move(on_g), std::move(g_prime), *second, move_limit);
}

}  // namespace pvg
