// SPDX-License-Identifier: Apache-2.0
//
// oam-link: OAM multiplexed MIMO link simulator
// Copyright (C) 2026 The oam-link contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "oamlink/channel.hpp"
#include "oamlink/purity.hpp"
#include "oamlink/scenario.hpp"
#include "oamlink/special_functions.hpp"
#include "oamlink/sweep.hpp"

#include <benchmark/benchmark.h>

namespace
{
    void BM_BesselIScaled(benchmark::State &state)
    {
        const double x = double(state.range(0)) / 100.0;
        for (auto _ : state)
            for (int m = 0; m <= 8; ++m)
                benchmark::DoNotOptimize(oam::bessel_i_scaled(m, x));
    }
    BENCHMARK(BM_BesselIScaled)->Arg(1)->Arg(100)->Arg(10000)->Arg(10000000);

    void BM_PurityRow(benchmark::State &state)
    {
        const oam::Scenario s = oam::default_scenario();
        const oam::ResolvedScenario r = oam::resolve(s);
        const oam::BeamParams &b = r.beams[std::size_t(state.range(0))];
        for (auto _ : state)
            benchmark::DoNotOptimize(oam::purity_row(b, r.misalignment, s.turbulence, s.link_distance, s.purity));
    }
    BENCHMARK(BM_PurityRow)->DenseRange(0, 3);

    void BM_ChannelMatrix(benchmark::State &state)
    {
        oam::Scenario s = oam::default_scenario();
        s.num_antennas = int(state.range(0));
        const oam::ResolvedScenario r = oam::resolve(s);
        for (auto _ : state)
            benchmark::DoNotOptimize(oam::channel_matrix(r.channel, r.beams.back(), r.geometry, r.misalignment));
    }
    BENCHMARK(BM_ChannelMatrix)->Arg(2)->Arg(8)->Arg(32);

    void BM_Evaluate(benchmark::State &state)
    {
        const oam::Scenario s = oam::default_scenario();
        for (auto _ : state)
            benchmark::DoNotOptimize(oam::evaluate(s).total_capacity);
    }
    BENCHMARK(BM_Evaluate);

    void BM_EvaluateCached(benchmark::State &state)
    {
        const oam::Scenario s = oam::default_scenario();
        oam::PurityCache cache;
        for (auto _ : state)
            benchmark::DoNotOptimize(oam::evaluate(s, &cache).total_capacity);
    }
    BENCHMARK(BM_EvaluateCached);

    void BM_Fig7(benchmark::State &state)
    {
        const oam::Scenario s = oam::default_scenario();
        const oam::FigureSpec f = oam::figure_spec("fig7");
        for (auto _ : state)
            benchmark::DoNotOptimize(oam::run_figure(f, s, {1}).rows.size());
    }
    BENCHMARK(BM_Fig7)->Unit(benchmark::kMillisecond);
}

BENCHMARK_MAIN();
