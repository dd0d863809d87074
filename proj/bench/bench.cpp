/*
 * Copyright 2026 The ppsign Authors
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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "ppsign/exactalg.hpp"
#include "ppsign/oracle.hpp"

using namespace ppsign;

namespace {

BoxDims cube(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  return make_box(side, side, side);
}

void BM_SignedCountParallel(benchmark::State& state) {
  const BoxDims box = cube(state);
  for (auto _ : state) benchmark::DoNotOptimize(signed_count(box, SymmetryClass::CSSC));
}

void BM_SignedCountSerial(benchmark::State& state) {
  const BoxDims box = cube(state);
  for (auto _ : state) benchmark::DoNotOptimize(signed_count_serial(box, SymmetryClass::CSSC));
}

void BM_SelfComplementaryParallel(benchmark::State& state) {
  const BoxDims box = cube(state);
  for (auto _ : state) benchmark::DoNotOptimize(signed_count(box, SymmetryClass::SC));
}

void BM_SelfComplementarySerial(benchmark::State& state) {
  const BoxDims box = cube(state);
  for (auto _ : state) benchmark::DoNotOptimize(signed_count_serial(box, SymmetryClass::SC));
}

ExactMatrix minor_input(long p, long n) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> d(-3, 3);
  ExactMatrix t(static_cast<std::size_t>(p), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) = d(gen);
  return t;
}

void BM_SumOfMinorsParallel(benchmark::State& state) {
  const ExactMatrix t = minor_input(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sum_of_minors(t));
}

void BM_SumOfMinorsSerial(benchmark::State& state) {
  const ExactMatrix t = minor_input(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sum_of_minors_serial(t));
}

}  // namespace

BENCHMARK(BM_SignedCountParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignedCountSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SelfComplementaryParallel)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SelfComplementarySerial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SumOfMinorsParallel)->Args({12, 4})->Args({16, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SumOfMinorsSerial)->Args({12, 4})->Args({16, 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
