// Copyright 2026 The EntangleKit Authors
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

#include <vector>

#include "entanglekit/kernels.hpp"
#include "entanglekit/random.hpp"

namespace {

namespace k = entanglekit::kernels;
using entanglekit::Complex;

std::vector<Complex> random_entries(std::size_t count, std::uint64_t seed) {
  entanglekit::Rng rng(seed);
  std::vector<Complex> v(count);
  for (Complex& z : v) z = rng.complex_gaussian();
  return v;
}

template <auto Kernel>
void BM_Gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(n * n, 1), b = random_entries(n * n, 2);
  std::vector<Complex> c(n * n);
  for (auto _ : state) {
    Kernel(a, b, c, n, n, n);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * n));
}

template <auto Kernel>
void BM_Kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(n * n, 3), b = random_entries(n * n, 4);
  std::vector<Complex> out(n * n * n * n);
  for (auto _ : state) {
    Kernel(a, n, n, b, n, n, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

template <auto Kernel>
void BM_PartialTrace(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto rho = random_entries(d * d * d * d, 5);
  std::vector<Complex> out(d * d);
  for (auto _ : state) {
    Kernel(rho, d, d, state.range(1) != 0, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rho.size()));
}

BENCHMARK(BM_Gemm<k::reference::gemm>)->Name("gemm/reference")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_Gemm<k::parallel::gemm>)->Name("gemm/parallel")->RangeMultiplier(2)->Range(16, 256)->UseRealTime();
BENCHMARK(BM_Kron<k::reference::kron>)->Name("kron/reference")->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_Kron<k::parallel::kron>)->Name("kron/parallel")->RangeMultiplier(2)->Range(4, 32)->UseRealTime();
BENCHMARK(BM_PartialTrace<k::reference::partial_trace>)
    ->Name("partial_trace/reference")
    ->ArgsProduct({{8, 16, 32, 64}, {0, 1}});
BENCHMARK(BM_PartialTrace<k::parallel::partial_trace>)
    ->Name("partial_trace/parallel")
    ->ArgsProduct({{8, 16, 32, 64}, {0, 1}})
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
