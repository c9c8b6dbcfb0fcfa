#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "pvg/engine.hpp"
#include "pvg/error.hpp"
#include "pvg/hitch_a_ride.hpp"
#include "pvg/instances.hpp"
#include "reference.hpp"

namespace pvg {
namespace {

class HaltNow final : public Strategy {
 public:
  Action decide(const Observation&) override { return Action::halt(); }
  std::string name() const override { return "halt-now"; }
};

class StayAboard final : public Strategy {
 public:
  Action decide(const Observation& obs) override {
    seen.push_back(obs);
    return Action::ride(obs.current_carrier);
  }
  std::string name() const override { return "stay"; }
  std::vector<Observation> seen;
};

class BoardFixed final : public Strategy {
 public:
  explicit BoardFixed(CarrierId c) : c_(c) {}
  Action decide(const Observation&) override { return Action::ride(c_); }
  std::string name() const override { return "board-fixed"; }

 private:
  CarrierId c_;
};

// Boards the highest-id carrier present each step; halts after `limit` moves.
class HopHighest final : public Strategy {
 public:
  explicit HopHighest(std::size_t limit) : limit_(limit) {}
  Action decide(const Observation& obs) override {
    if (taken_++ == limit_) return Action::halt();
    return Action::ride(obs.arriving.back());
  }
  std::string name() const override { return "hop-highest"; }

 private:
  std::size_t limit_;
  std::size_t taken_ = 0;
};

TEST(Engine, ImmediateHalt) {
  const RouteSet rs = RouteSet::from_routes(3, {{0, 1, 2}});
  HaltNow s;
  const Trace t = run(rs, s, CarrierId(0), 10);
  EXPECT_TRUE(t.halted);
  EXPECT_EQ(t.moves(), 0u);
  EXPECT_EQ(t.visited_sites, (std::vector<SiteId>{SiteId(0)}));
  EXPECT_FALSE(is_concrete_cover(rs, t));
}

TEST(Engine, SingleSiteEmptyWalkCovers) {
  const RouteSet rs = RouteSet::from_routes(1, {{0}});
  HaltNow s;
  EXPECT_TRUE(is_concrete_cover(rs, run(rs, s, CarrierId(0), 1)));
}

TEST(Engine, MoveLimitReturnsPartialTrace) {
  const RouteSet rs = RouteSet::from_routes(3, {{0, 1, 2}});
  StayAboard s;
  const Trace t = run(rs, s, CarrierId(0), 7);
  EXPECT_FALSE(t.halted);
  EXPECT_EQ(t.moves(), 7u);
  EXPECT_EQ(t.visited_sites.size(), 3u);
  EXPECT_TRUE(is_concrete_cover(rs, t));
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    EXPECT_EQ(t.steps[i].time, i);
    EXPECT_EQ(t.steps[i].from, SiteId(i % 3));
    EXPECT_EQ(t.steps[i].to, SiteId((i + 1) % 3));
  }
}

TEST(Engine, ObservationContract) {
  const RouteSet rs = RouteSet::from_routes(3, {{0, 1, 2}, {0, 2}});
  StayAboard anon;
  run(rs, anon, CarrierId(0), 4);
  ASSERT_FALSE(anon.seen.empty());
  EXPECT_EQ(anon.seen[0].time, 0u);
  EXPECT_EQ(anon.seen[0].arriving, (std::vector<CarrierId>{CarrierId(0), CarrierId(1)}));
  for (const auto& o : anon.seen) {
    EXPECT_FALSE(o.site.has_value());
    EXPECT_TRUE(o.sees(o.current_carrier));
  }

  const RouteSet ids = rs.with_mode(Mode::kWithIds);
  StayAboard named;
  run(ids, named, CarrierId(0), 4);
  for (const auto& o : named.seen) {
    ASSERT_TRUE(o.site.has_value());
    EXPECT_EQ(*o.site, SiteId(o.time % 3));
  }
}

TEST(Engine, IllegalBoarding) {
  const RouteSet rs = RouteSet::from_routes(4, {{0, 1}, {2, 3}});
  BoardFixed s(CarrierId(1));
  try {
    run(rs, s, CarrierId(0), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIllegalAction);
  }
}

TEST(Engine, RejectsBadArguments) {
  const RouteSet rs = RouteSet::from_routes(1, {{0}});
  HaltNow s;
  EXPECT_THROW(run(rs, s, CarrierId(3), 5), Error);
  EXPECT_THROW(run(rs, s, CarrierId(0), 0), Error);
}

TEST(Engine, DefaultMoveLimit) {
  EXPECT_EQ(default_move_limit(gen_thm3(12, 4, 6).routes), 16u * 4 * 36);
}

TEST(Replay, AcceptsEngineOutputAndHandBuiltRide) {
  const Instance inst = gen_thm4(9, 3, 5);
  const RouteSet& rs = inst.routes;
  auto s = hitch_a_ride(rs.max_period(), false);
  const Trace t = run(rs, *s, CarrierId(0), default_move_limit(rs));
  EXPECT_TRUE(replay_check(rs, t).ok);

  Trace hand;
  hand.start_carrier = CarrierId(0);
  hand.halted = true;
  const Carrier& c0 = rs.carrier(CarrierId(0));
  hand.visited_sites.push_back(c0.route.at(0));
  for (Time i = 0; i < c0.route.period(); ++i) {
    hand.steps.push_back({i, c0.id, c0.route.at(i), c0.route.at(i + 1)});
    if (std::find(hand.visited_sites.begin(), hand.visited_sites.end(), c0.route.at(i + 1)) ==
        hand.visited_sites.end())
      hand.visited_sites.push_back(c0.route.at(i + 1));
  }
  const ReplayReport r = replay_check(rs, hand);
  EXPECT_TRUE(r.ok) << r.reason;
}

TEST(Replay, RejectsSwitchToAbsentCarrier) {
  const Instance inst = gen_thm3(9, 3, 5);
  const RouteSet& rs = inst.routes;
  StayAboard s;
  Trace t = run(rs, s, CarrierId(0), 5);
  // c0 and c1 never meet; their shared-nothing routes make step 2 illegal.
  t.steps[2].carrier = CarrierId(1);
  t.steps[2].from = rs.carrier(CarrierId(1)).route.at(2);
  t.steps[2].to = rs.carrier(CarrierId(1)).route.at(3);
  const ReplayReport r = replay_check(rs, t);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.first_bad_step, 2u);
  EXPECT_THROW(is_concrete_cover(rs, t), Error);
}

TEST(Replay, RejectsTamperedVisitedList) {
  const RouteSet rs = RouteSet::from_routes(3, {{0, 1, 2}});
  StayAboard s;
  Trace t = run(rs, s, CarrierId(0), 3);
  std::swap(t.visited_sites[1], t.visited_sites[2]);
  EXPECT_FALSE(replay_check(rs, t).ok);
}

// Switch legality and determinism on random walks.
TEST(Engine, RandomWalksAreLegalAndDeterministic) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = gen_random_feasible(1 + rng() % 8, 1 + rng() % 4, 1 + rng() % 6, rng());
    const RouteSet& rs = inst.routes;
    const std::size_t len = rng() % 40;
    const CarrierId start(rng() % rs.num_carriers());
    HopHighest a(len), b(len);
    const Trace ta = run(rs, a, start, 1000);
    const Trace tb = run(rs, b, start, 1000);
    EXPECT_EQ(ta, tb);
    EXPECT_TRUE(replay_check(rs, ta).ok);
    CarrierId prev = start;
    for (const Step& s : ta.steps) {
      EXPECT_EQ(ref::pos(rs, s.carrier.index(), s.time), ref::pos(rs, prev.index(), s.time));
      EXPECT_EQ(s.to.value, ref::pos(rs, s.carrier.index(), s.time + 1));
      prev = s.carrier;
    }
  }
}

TEST(Export, CsvAndJsonLine) {
  const RouteSet rs = RouteSet::from_routes(3, {{0, 1, 2}});
  StayAboard s;
  const Trace t = run(rs, s, CarrierId(0), 4);
  std::ostringstream csv;
  write_trace_csv(csv, rs, t);
  EXPECT_EQ(csv.str(),
            "step,time,carrier,from,to,new_site\n"
            "0,0,c0,s0,s1,1\n"
            "1,1,c0,s1,s2,1\n"
            "2,2,c0,s2,s0,0\n"
            "3,3,c0,s0,s1,0\n");
  EXPECT_EQ(to_json_line(summarize(rs, t, "tri", "stay")),
            R"({"instance":"tri","strategy":"stay","k":1,"n":3,"p":3,"moves":4,"halted":false,"covered":true})");
}

}  // namespace
}  // namespace pvg
