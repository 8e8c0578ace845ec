// Copyright 2026 The pmdqc Authors
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
// Serial reference versus OpenMP kernels. Each benchmark takes the execution
// mode as its first argument (0 = serial, 1 = parallel).

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pmdqc/dqc1.hpp"
#include "pmdqc/kernels.hpp"
#include "pmdqc/mermin_peres.hpp"
#include "pmdqc/nmr.hpp"
#include "pmdqc/noise.hpp"

namespace {

using namespace pmdqc;

Execution mode(const benchmark::State &state) {
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_Dft(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(1));
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    std::vector<Complex> x(n);
    for (auto &v : x) {
        v = Complex(g(rng), g(rng));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::dft(x, mode(state)));
    }
}
BENCHMARK(BM_Dft)->ArgsProduct({{0, 1}, {1024, 4096}})->Unit(benchmark::kMillisecond);

void BM_FidSynthesis(benchmark::State &state) {
    const auto params = malonic_acid();
    const auto h = build_hamiltonian(params);
    const auto rho0 = transverse_state(params.n_spins);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_fid(rho0, h, 1.0 / 32.0, 4096, 2.0, mode(state)));
    }
}
BENCHMARK(BM_FidSynthesis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NchvMax(benchmark::State &state) {
    const PMSquare sq = pm_square();
    for (auto _ : state) {
        benchmark::DoNotOptimize(nchv_max(sq, mode(state)));
    }
}
BENCHMARK(BM_NchvMax)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_BetaSweep(benchmark::State &state) {
    const auto ratios = default_sweep_ratios();
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_sweep(1.5, ratios, ProbeSpec{1.0}, 3, mode(state)));
    }
}
BENCHMARK(BM_BetaSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClusterCenters(benchmark::State &state) {
    const auto params = malonic_acid();
    for (auto _ : state) {
        benchmark::DoNotOptimize(cluster_centers(params, {}, 1e-4, mode(state)));
    }
}
BENCHMARK(BM_ClusterCenters)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
