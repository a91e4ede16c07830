// Copyright 2026 The isocert Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "isocert/calculus.hpp"
#include "isocert/catalogue.hpp"
#include "isocert/growth.hpp"
#include "isocert/isoperimetry.hpp"
#include "isocert/random.hpp"
#include "isocert/uncertainty.hpp"

namespace {

using namespace isocert;

void BM_BuildBallLattice(benchmark::State& state) {
  const Space space(lattice_spec(2));
  const int horizon = static_cast<int>(state.range(0));
  std::size_t n = 0;
  for (auto _ : state) {
    auto ball = build_ball(space, horizon);
    n = ball.size();
    benchmark::DoNotOptimize(ball);
  }
  state.counters["vertices"] = static_cast<double>(n);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_BuildBallLattice)->Arg(16)->Arg(64)->Arg(256);

void BM_BuildBallHeisenberg(benchmark::State& state) {
  const Space space(heisenberg_spec());
  for (auto _ : state) benchmark::DoNotOptimize(build_ball(space, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildBallHeisenberg)->Arg(6)->Arg(10);

void BM_ExactProfile(benchmark::State& state) {
  const auto ball = build_ball(Space(lattice_spec(2)), 4);
  const auto kmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_profile(ball, kmax, Regime::Infinite));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(subset_count(ball.interior_count(), kmax)));
}
BENCHMARK(BM_ExactProfile)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Annealing(benchmark::State& state) {
  const auto ball = build_ball(Space(lattice_spec(2)), 8);
  const std::vector<std::size_t> ks{16};
  AnnealingOptions o;
  o.budget = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(heuristic_profile(ball, ks, Regime::Infinite, o));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Annealing)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_CoareaResidual(benchmark::State& state) {
  const auto ball = build_ball(Space(lattice_spec(2)), 12);
  RandomFieldOptions o;
  o.support_size = static_cast<std::size_t>(state.range(0));
  o.seed = 1;
  const auto f = random_exact_field(ball, o);
  for (auto _ : state) benchmark::DoNotOptimize(coarea_residual(ball, f));
}
BENCHMARK(BM_CoareaResidual)->Arg(8)->Arg(64);

void BM_HpwRatio(benchmark::State& state) {
  const auto ball = build_ball(Space(lattice_spec(2)), 12);
  const auto table = growth_table(ball);
  const auto w = make_weight(ball, CanonicalWeight{0});
  RandomFieldOptions o;
  o.support_size = 32;
  o.seed = 2;
  const auto f = random_real_field(ball, o);
  const UncertaintyParams params{2.0, 1.0, Regime::Infinite};
  for (auto _ : state) benchmark::DoNotOptimize(hpw_ratio(ball, f, w, table, params));
}
BENCHMARK(BM_HpwRatio);

}  // namespace

BENCHMARK_MAIN();
