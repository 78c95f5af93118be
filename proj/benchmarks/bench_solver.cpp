// SPDX-License-Identifier: Apache-2.0
//
// ssris - element-count feasibility solver for self-sustainable RIS
// Copyright (C) 2026 The ssris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <ssris/phys.hpp>
#include <ssris/solver.hpp>
#include <ssris/validate.hpp>

#include <benchmark/benchmark.h>

using namespace ssris;

static void BM_SolveP1(benchmark::State& state)
{
    const SystemParams p;
    const auto geom = default_geometry();
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_p1(p, geom, 10e6));
}
BENCHMARK(BM_SolveP1);

static void BM_SolveP3(benchmark::State& state)
{
    const SystemParams p;
    const auto geom = default_geometry();
    const double eps = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_p3(p, geom, 10e6, eps));
}
BENCHMARK(BM_SolveP3)->Arg(10)->Arg(100)->Arg(10000);

static void BM_SolveP4(benchmark::State& state)
{
    const SystemParams p;
    const auto geom = default_geometry();
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_p4(p, geom, 10e6, 0.01));
}
BENCHMARK(BM_SolveP4);

static void BM_LosChannelAndLink(benchmark::State& state)
{
    SystemParams p;
    p.num_bs_antennas = 16;
    const auto geom = default_geometry();
    const Eigen::Index m = state.range(0);
    for (auto _ : state) {
        const auto chan = los_channel(p, geom, m);
        const auto bf = design_beamforming(p, chan);
        benchmark::DoNotOptimize(simulate_link(p, chan, bf.phi, bf.w));
    }
}
BENCHMARK(BM_LosChannelAndLink)->Arg(16)->Arg(64)->Arg(256);

static void BM_EmpiricalOutage(benchmark::State& state)
{
    const SystemParams p;
    const auto geom = default_geometry();
    const McConfig cfg{static_cast<std::uint64_t>(state.range(0)), 1, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(empirical_outage(p, geom, 32, 1e-2, cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EmpiricalOutage)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
