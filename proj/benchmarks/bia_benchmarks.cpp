// Copyright 2026 The bia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "bia/counting.hpp"
#include "bia/diophantine.hpp"
#include "bia/feasibility.hpp"
#include "bia/scheduler.hpp"
#include "bia/signaling.hpp"

namespace {

using namespace bia;

GroupProfile even_profile(int users) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(users), 1000);
  s.back() += 500;
  return GroupProfile(s);
}

void BM_ClosedForm(benchmark::State& state) {
  const GroupProfile s = even_profile(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_solution(s));
}
BENCHMARK(BM_ClosedForm)->DenseRange(2, 8, 2);

void BM_BruteForceAll(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  const GroupProfile s({m, m, m + m / 2});
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_solve(s, SearchMode::kAll));
}
BENCHMARK(BM_BruteForceAll)->Arg(4)->Arg(8)->Arg(16);

void BM_FeasibleRegion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(feasible_region(state.range(0)));
}
BENCHMARK(BM_FeasibleRegion)->Arg(20)->Arg(200);

void BM_BuildSchedule(benchmark::State& state) {
  const ChannelConfig cfg(state.range(0), {0, state.range(0) / 4, state.range(0) / 2});
  const LambdaSolution lam = closed_form_solution(group_profile(cfg));
  for (auto _ : state) benchmark::DoNotOptimize(build_schedule(cfg, lam));
}
BENCHMARK(BM_BuildSchedule)->Arg(60)->Arg(6000);

void BM_VerifySchedule(benchmark::State& state) {
  const auto users = state.range(0);
  std::vector<std::int64_t> offsets;
  for (std::int64_t i = 0; i < users; ++i) offsets.push_back(i * 10);
  const ChannelConfig cfg(10 * users, offsets);
  const Schedule sched = build_schedule(cfg, closed_form_solution(group_profile(cfg)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_schedule_end_to_end(sched, ++seed, 1, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sched.tuples.size()));
}
BENCHMARK(BM_VerifySchedule)->DenseRange(2, 5);

void BM_LowerBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(f_low_3(30000, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LowerBound)->Arg(5)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ExactCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exact_count(16, static_cast<int>(state.range(0)), 3, kDefaultEnumerationBound, 1));
}
BENCHMARK(BM_ExactCount)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_p(60, static_cast<int>(state.range(0)), 3, 10000, ++seed, 1));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_MonteCarlo)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
