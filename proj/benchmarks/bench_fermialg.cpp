// Copyright 2026 The fermialg Authors
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

#include <vector>

#include "benchmark/benchmark.h"
#include "fermialg/eigen.hpp"
#include "fermialg/fermi_ops.hpp"
#include "fermialg/lie.hpp"
#include "fermialg/spectral.hpp"
#include "fermialg/tangle.hpp"

using namespace fermialg;

namespace {

DenseVector ghz(int n) {
    DenseVector psi(mode_dimension(n));
    psi[0] = psi[psi.dim() - 1] = 1.0 / std::sqrt(2.0);
    return psi;
}

void BM_hamiltonian_k_chain(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hamiltonian_k(n));
    }
}
BENCHMARK(BM_hamiltonian_k_chain)->DenseRange(2, 16, 2);

void BM_hamiltonian_k_closed_form(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hamiltonian_k_closed_form(n));
    }
}
BENCHMARK(BM_hamiltonian_k_closed_form)->DenseRange(2, 16, 2);

void BM_creation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(creation(n, n));
    }
}
BENCHMARK(BM_creation)->DenseRange(4, 16, 4);

void BM_hermitian_eigen(benchmark::State& state) {
    const SparseOperator k = hamiltonian_k(static_cast<int>(state.range(0))) + number_operator(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigen(k));
    }
}
BENCHMARK(BM_hermitian_eigen)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

void BM_expm_hermitian(benchmark::State& state) {
    const SparseOperator k = hamiltonian_k(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expm_hermitian(k, 0.37));
    }
}
BENCHMARK(BM_expm_hermitian)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_tangle_direct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DenseVector psi = ghz(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(n_tangle_direct(psi, n));
    }
}
BENCHMARK(BM_tangle_direct)->Arg(2)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_tangle_factorized(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DenseVector psi = ghz(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(n_tangle_factorized(psi, n));
    }
}
BENCHMARK(BM_tangle_factorized)->Arg(2)->Arg(3)->Arg(4)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_close_ladder(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::vector<SparseOperator> gens{product_raising(n), product_lowering(n)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(close(gens));
    }
}
BENCHMARK(BM_close_ladder)->DenseRange(1, 8)->Unit(benchmark::kMicrosecond);

void BM_close_kn_and_classify(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(killing_classify(close_kn(n)));
    }
}
BENCHMARK(BM_close_kn_and_classify)->DenseRange(1, 8)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
