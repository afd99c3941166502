// Copyright 2026 The trimer Authors
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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "trimer/birman_schwinger.hpp"
#include "trimer/kernels.hpp"

namespace {

using namespace trimer;

std::vector<double> random_symmetric(std::size_t n) {
  std::mt19937 gen(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a[i * n + j] = a[j * n + i] = u(gen);
  return a;
}

template <void (*Fn)(std::span<double>, std::size_t, std::vector<double>&, std::vector<double>&)>
void BM_Tridiagonalize(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto src = random_symmetric(n);
  std::vector<double> d, e;
  for (auto _ : state) {
    auto a = src;
    Fn(a, n, d, e);
    benchmark::DoNotOptimize(d.data());
  }
  state.counters["threads"] = kernels::max_threads();
}

template <void (*Fn)(const kernels::BsBlockSpec&, std::vector<double>&)>
void BM_AssembleBlock(benchmark::State& state) {
  const bs::BsGrid g = bs::make_grid(-1.0, 0.05, static_cast<std::size_t>(state.range(0)));
  kernels::BsBlockSpec spec;
  spec.nu = g.half_nodes;
  spec.weights = g.half_weights;
  spec.epsilon = 0.05;
  spec.lambda = 0.5;
  std::vector<double> out;
  for (auto _ : state) {
    Fn(spec, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["threads"] = kernels::max_threads();
}

BENCHMARK(BM_Tridiagonalize<kernels::tridiagonalize_serial>)->Name("tridiagonalize/serial")->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tridiagonalize<kernels::tridiagonalize_omp>)->Name("tridiagonalize/omp")->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssembleBlock<kernels::assemble_bs_block_serial>)->Name("bs_block/serial")->Arg(1600)->Arg(3200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssembleBlock<kernels::assemble_bs_block_omp>)->Name("bs_block/omp")->Arg(1600)->Arg(3200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
