// Copyright 2026 The stabspec developers
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

#include "stabspec/classifier.hpp"
#include "stabspec/operator_algebra.hpp"
#include "stabspec/polytope.hpp"
#include "stabspec/rng.hpp"
#include "stabspec/spectral_core.hpp"

using namespace stabspec;

namespace {

void BM_PauliTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PauliAlgebra alg(2, n);
    benchmark::DoNotOptimize(alg.dim());
  }
}
BENCHMARK(BM_PauliTable)->Arg(1)->Arg(2)->Arg(3);

void BM_JacobiEigen(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  CounterRng rng(1, 0);
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.next_complex_gaussian();
  const CMatrix h = (g + g.adjoint()) / 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(eigen_spectrum(h).sorted_desc()[0]);
}
BENCHMARK(BM_JacobiEigen)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_CubeDd(benchmark::State& state) {
  for (auto _ : state) {
    RationalPolytope p = lambda_hrep_qubits(1);
    double_description(p, {.box_bound = 4.0});
    benchmark::DoNotOptimize(p.vertices.size());
  }
}
BENCHMARK(BM_CubeDd);

void BM_MuggleChamber22(benchmark::State& state) {
  for (auto _ : state) {
    const auto sp = build_astab_spectral_polytope(2, 2);
    benchmark::DoNotOptimize(sp.full.vertices.size());
  }
}
BENCHMARK(BM_MuggleChamber22);

void BM_SampleLambdaVertex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_lambda_vertices(n, 1, seed++).front().hs_norm_sq);
  }
}
BENCHMARK(BM_SampleLambdaVertex)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_WignerFunction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = n == 1 ? 3 : 9;
  CounterRng rng(2, 0);
  CMatrix g(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) g(i, j) = rng.next_complex_gaussian();
  CMatrix h = (g + g.adjoint()) / 2.0;
  h /= h.trace().real();
  const HermitianOperator rho{3, n, "generic", h};
  for (auto _ : state) benchmark::DoNotOptimize(wigner_function(rho).min());
}
BENCHMARK(BM_WignerFunction)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
