#include <benchmark/benchmark.h>

#include "pvg/engine.hpp"
#include "pvg/guessing_ride.hpp"
#include "pvg/hitch_a_ride.hpp"
#include "pvg/instances.hpp"
#include "pvg/meeting_graph.hpp"
#include "pvg/oracle.hpp"

namespace {

using namespace pvg;

void BM_MeetingGraphSiHo(benchmark::State& state) {
  const RouteSet rs = gen_siho(static_cast<std::size_t>(state.range(0)), 3).routes;
  for (auto _ : state) benchmark::DoNotOptimize(build_meeting_graph(rs));
  state.counters["p"] = static_cast<double>(rs.max_period());
}
BENCHMARK(BM_MeetingGraphSiHo)->Arg(10)->Arg(20)->Arg(40);

void BM_FeasibleRandom(benchmark::State& state) {
  const RouteSet rs = gen_random_feasible(64, static_cast<std::size_t>(state.range(0)), 16, 1).routes;
  for (auto _ : state) benchmark::DoNotOptimize(is_feasible(rs));
}
BENCHMARK(BM_FeasibleRandom)->Arg(8)->Arg(32)->Arg(128);

void BM_OracleThm3(benchmark::State& state) {
  const RouteSet rs = gen_thm3(12, 4, 6).routes;
  for (auto _ : state) benchmark::DoNotOptimize(min_moves(rs, CarrierId(1)));
}
BENCHMARK(BM_OracleThm3);

void BM_OracleThm8(benchmark::State& state) {
  const RouteSet rs = gen_thm8(13, 3).routes;
  for (auto _ : state) benchmark::DoNotOptimize(min_moves(rs, CarrierId(0)));
}
BENCHMARK(BM_OracleThm8);

void BM_HitchThm7(benchmark::State& state) {
  const RouteSet rs = gen_thm7(static_cast<std::size_t>(state.range(0)), 4).routes;
  std::uint64_t moves = 0;
  for (auto _ : state) {
    HitchARide s(rs.max_period(), true);
    moves = run(rs, s, CarrierId(0), default_move_limit(rs)).moves();
  }
  state.counters["moves"] = static_cast<double>(moves);
}
BENCHMARK(BM_HitchThm7)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_GuessThm4(benchmark::State& state) {
  const std::size_t p = static_cast<std::size_t>(state.range(0));
  const RouteSet rs = gen_thm4(12, 3, p).routes.with_mode(Mode::kWithIds);
  std::uint64_t moves = 0;
  for (auto _ : state) {
    GuessingRide s(rs.num_sites(), rs.num_sites());
    moves = run(rs, s, CarrierId(0), default_move_limit(rs)).moves();
  }
  state.counters["moves"] = static_cast<double>(moves);
}
BENCHMARK(BM_GuessThm4)->Arg(6)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
