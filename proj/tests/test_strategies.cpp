#include <gtest/gtest.h>

#include <random>

#include "pvg/engine.hpp"
#include "pvg/error.hpp"
#include "pvg/guessing_ride.hpp"
#include "pvg/hitch_a_ride.hpp"
#include "pvg/instances.hpp"
#include "pvg/meeting_graph.hpp"

namespace pvg {
namespace {

Trace explore(const RouteSet& rs, Strategy& s, CarrierId start = CarrierId(0)) {
  return run(rs, s, start, default_move_limit(rs));
}

TEST(Hitch, SingleCarrierRidesExactlyB) {
  for (std::uint32_t p = 1; p <= 6; ++p) {
    std::vector<std::uint32_t> r(p);
    for (std::uint32_t i = 0; i < p; ++i) r[i] = i;
    const RouteSet rs = RouteSet::from_routes(p, {r});
    HitchARide s(p, true);
    const Trace t = explore(rs, s);
    EXPECT_TRUE(t.halted);
    EXPECT_EQ(t.moves(), p);
    EXPECT_TRUE(is_concrete_cover(rs, t));
  }
}

TEST(Hitch, RideLength) {
  EXPECT_EQ(HitchARide(5, true).ride_length(), 5u);
  EXPECT_EQ(HitchARide(5, false).ride_length(), 25u);
}

TEST(Hitch, Thm3WithinBound) {
  const RouteSet rs = gen_thm3(12, 4, 6).routes;
  HitchARide s(6, true);
  const Trace t = explore(rs, s);
  EXPECT_TRUE(t.halted);
  EXPECT_TRUE(is_concrete_cover(rs, t));
  EXPECT_LE(t.moves(), 60u);
}

TEST(Hitch, ParentMapSpansHomeComponentAndNeighborhoodsComplete) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = gen_random_feasible(2 + rng() % 9, 1 + rng() % 5, 1 + rng() % 8, rng());
    const RouteSet& rs = inst.routes;
    const MeetingGraph h = build_meeting_graph(rs);
    const bool homo = is_homogeneous(rs);
    const CarrierId start(rng() % rs.num_carriers());
    HitchARide s(rs.max_period(), homo);
    const Trace t = explore(rs, s, start);
    ASSERT_TRUE(t.halted);
    EXPECT_TRUE(is_concrete_cover(rs, t));
    EXPECT_TRUE(s.encounters().empty());

    const auto comp = h.components();
    std::set<CarrierId> component;
    for (std::size_t c = 0; c < rs.num_carriers(); ++c) {
      if (comp[c] == comp[start.index()]) component.emplace(c);
    }
    EXPECT_EQ(s.visited(), component);
    EXPECT_EQ(s.parents().size(), component.size() - 1);
    for (const auto& [child, parent] : s.parents()) {
      EXPECT_TRUE(h.adjacent(child, parent));
      // Following parents reaches home without cycling.
      CarrierId cur = child;
      std::size_t hops = 0;
      while (cur != *s.home() && hops <= rs.num_carriers()) {
        cur = s.parents().at(cur);
        ++hops;
      }
      EXPECT_EQ(cur, *s.home());
    }
    for (CarrierId c : component) {
      for (CarrierId nb : h.neighbors(c)) EXPECT_TRUE(s.neighbors(c).count(nb)) << "carrier " << c.value;
    }
  }
}

TEST(Hitch, UnderestimatedBoundMissesSites) {
  // The only meeting happens at phase 3; a ride of 2 never sees it.
  const RouteSet rs = RouteSet::from_routes(7, {{0, 1, 2, 3}, {4, 5, 6, 3}});
  HitchARide s(2, true);
  const Trace t = explore(rs, s);
  EXPECT_FALSE(t.halted && is_concrete_cover(rs, t));
  HitchARide ok(4, true);
  EXPECT_TRUE(is_concrete_cover(rs, explore(rs, ok)));
}

TEST(Hitch, Deterministic) {
  const RouteSet rs = gen_thm4(9, 3, 5).routes;
  HitchARide a(5, false), b(5, false);
  EXPECT_EQ(explore(rs, a), explore(rs, b));
}

TEST(Guess, RequiresIds) {
  const RouteSet rs = RouteSet::from_routes(2, {{0, 1}});
  GuessingRide s(2, 1);
  try {
    explore(rs, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIdMode);
  }
}

TEST(Guess, SingleCarrierWithGuessN) {
  for (std::uint32_t n = 1; n <= 7; ++n) {
    std::vector<std::uint32_t> r(n);
    for (std::uint32_t i = 0; i < n; ++i) r[i] = i;
    const RouteSet rs = RouteSet::from_routes(n, {r}, Mode::kWithIds);
    GuessingRide s(n, n);
    const Trace t = explore(rs, s);
    EXPECT_TRUE(t.halted);
    EXPECT_TRUE(is_concrete_cover(rs, t));
    EXPECT_LE(t.moves(), n);
  }
}

TEST(Guess, Thm4WithinBound) {
  const RouteSet rs = gen_thm4(9, 3, 5).routes.with_mode(Mode::kWithIds);
  for (std::uint64_t g0 : {1u, 9u}) {
    GuessingRide s(9, g0);
    const Trace t = explore(rs, s);
    EXPECT_TRUE(t.halted);
    EXPECT_TRUE(is_concrete_cover(rs, t));
    EXPECT_LT(t.moves(), 900u);
  }
}

TEST(Guess, DoublingAndMonotoneVisited) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = gen_random_feasible(2 + rng() % 9, 1 + rng() % 5, 1 + rng() % 8, rng());
    const RouteSet rs = inst.routes.with_mode(Mode::kWithIds);
    const std::uint64_t g0 = 1 + rng() % 3;
    GuessingRide s(rs.num_sites(), g0);
    const Trace t = explore(rs, s, CarrierId(rng() % rs.num_carriers()));
    ASSERT_TRUE(t.halted);
    EXPECT_TRUE(is_concrete_cover(rs, t));
    EXPECT_EQ(s.visited_sites().size(), rs.num_sites());
    ASSERT_FALSE(s.guesses().empty());
    EXPECT_EQ(s.guesses().front(), g0);
    for (std::size_t i = 1; i < s.guesses().size(); ++i) EXPECT_EQ(s.guesses()[i], 2 * s.guesses()[i - 1]);
    EXPECT_TRUE(std::is_sorted(s.visited_at_restart().begin(), s.visited_at_restart().end()));
    EXPECT_EQ(s.visited_at_restart().size() + 1, s.guesses().size());
  }
}

}  // namespace
}  // namespace pvg
