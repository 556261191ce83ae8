// Copyright 2026 The sublat Authors
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

#include <benchmark/benchmark.h>

#include "sublat/dempster.hpp"
#include "sublat/measures.hpp"
#include "sublat/sampling.hpp"
#include "sublat/verify.hpp"

namespace {

void BM_Factorize(benchmark::State& state) {
    const auto n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sublat::factorize(n));
    }
}
BENCHMARK(BM_Factorize)->Arg(360)->Arg(999983)->Arg(720720);

void BM_DivisorLattice(benchmark::State& state) {
    for (auto _ : state) {
        const auto lat = sublat::divisors(state.range(0));
        benchmark::DoNotOptimize(lat.maximal_chains());
    }
}
BENCHMARK(BM_DivisorLattice)->Arg(18)->Arg(180)->Arg(720720);

void BM_RandomDensity(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sublat::random_density(n, seed++));
    }
}
BENCHMARK(BM_RandomDensity)->Arg(18)->Arg(60)->Arg(200);

void BM_Report(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const sublat::SubsystemProbabilities p(sublat::divisors(static_cast<std::int64_t>(n)),
                                           sublat::random_density(n, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sublat::make_report(p));
    }
}
BENCHMARK(BM_Report)->Arg(18)->Arg(180);

void BM_SweepContext(benchmark::State& state) {
    sublat::SweepConfig config;
    config.n_min = static_cast<std::uint64_t>(state.range(0));
    config.n_max = config.n_min;
    config.trials = 10;
    config.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sublat::run_sweep(config));
    }
}
BENCHMARK(BM_SweepContext)->Arg(60)->Arg(180)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
    const auto rho = sublat::random_density(18, 3);
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sublat::simulate(rho, shots, 7));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * shots));
}
BENCHMARK(BM_Simulate)->Arg(100000);

void BM_SelectionEnumeration(benchmark::State& state) {
    const sublat::ds::Evidence ev(sublat::ds::Frame::range(0, 100),
                                  {{60, 65, 72}, {70, 72}, {61, 65, 68}, {50, 55, 58, 62}});
    sublat::ds::LabelSet a1;
    for (sublat::ds::Label x = 60; x <= 69; ++x) {
        a1.push_back(x);
    }
    for (auto _ : state) {
        sublat::ds::Rational total(0);
        sublat::ds::for_each_selection(
            ev, [&](const sublat::ds::Selection& s) { total += selection_probability(s, a1); });
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_SelectionEnumeration);

} // namespace

BENCHMARK_MAIN();
