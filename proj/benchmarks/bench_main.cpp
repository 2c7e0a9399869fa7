/*
 * Copyright 2026 The gablab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <benchmark/benchmark.h>

#include "gablab/density.hpp"
#include "gablab/random.hpp"
#include "gablab/rdual.hpp"
#include "gablab/spectral.hpp"

namespace {

using namespace gablab;

Window seeded_window(const GroupSpec& g, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  return {g, random_complex_vector(g.order(), rng)};
}

void BM_HermitianEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Xorshift64Star rng(1);
  CMatrix a(n, n);
  for (int j = 0; j < n; ++j) a.col(j) = random_complex_vector(n, rng);
  const CMatrix h = a + a.adjoint();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(8, 64);

void BM_FrameOperator(benchmark::State& state) {
  const GroupSpec g = GroupSpec::make({static_cast<int>(state.range(0))});
  const GaborSystem sys(seeded_window(g, 2), Subgroup::whole(g, Side::primal),
                        span_subgroup(g, Side::dual, {g.elem(Side::dual, 2)}));
  for (auto _ : state) benchmark::DoNotOptimize(frame_operator(sys));
}
BENCHMARK(BM_FrameOperator)->Arg(16)->Arg(32)->Arg(64);

void BM_Duality(benchmark::State& state) {
  const GroupSpec g = GroupSpec::make({static_cast<int>(state.range(0))});
  const GaborSystem sys(seeded_window(g, 3), span_subgroup(g, Side::primal, {g.elem(Side::primal, 2)}),
                        span_subgroup(g, Side::dual, {g.elem(Side::dual, 2)}));
  for (auto _ : state) benchmark::DoNotOptimize(verify_duality(sys, 1e-9));
}
BENCHMARK(BM_Duality)->Arg(12)->Arg(24)->Arg(48);

void BM_CriticalRDual(benchmark::State& state) {
  const GroupSpec g = GroupSpec::make({static_cast<int>(state.range(0))});
  const Subgroup l = span_subgroup(g, Side::primal, {g.elem(Side::primal, 4)});
  const Window f = seeded_window(g, 4);
  const Subgroup perp = annihilator(l);
  for (auto _ : state) benchmark::DoNotOptimize(critical_rdual_verify(f, l, perp, 1e-10));
}
BENCHMARK(BM_CriticalRDual)->Arg(16)->Arg(32)->Arg(64);

void BM_ThetaSweep(benchmark::State& state) {
  const GroupSpec g = GroupSpec::make({static_cast<int>(state.range(0))});
  const GaborSystem sys(seeded_window(g, 5), span_subgroup(g, Side::primal, {g.elem(Side::primal, 2)}),
                        span_subgroup(g, Side::dual, {g.elem(Side::dual, 4)}));
  const std::vector<double> grid = default_theta_grid();
  for (auto _ : state) benchmark::DoNotOptimize(completeness_sweep(sys, grid));
}
BENCHMARK(BM_ThetaSweep)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
