// Copyright 2026 The dill-series Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "dill/calculus.hpp"
#include "dill/dsl.hpp"
#include "dill/exponential.hpp"
#include "dill/laws.hpp"
#include "dill/multilinear.hpp"
#include "dill/sampling.hpp"

namespace {

using namespace dill;

// Args: dimension, degree.
void BM_Compose(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto D = static_cast<unsigned>(state.range(1));
  Rng rng = make_rng(1, "bench/compose");
  const TruncatedSeries f = random_series(rng, m, m, D);
  const TruncatedSeries g = random_series(rng, m, m, D, true);
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_Compose)->Args({1, 6})->Args({2, 5})->Args({3, 4})->Args({3, 6});

void BM_ComposeNaive(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto D = static_cast<unsigned>(state.range(1));
  Rng rng = make_rng(1, "bench/compose");
  const TruncatedSeries f = random_series(rng, m, m, D);
  const TruncatedSeries g = random_series(rng, m, m, D, true);
  for (auto _ : state) benchmark::DoNotOptimize(compose_naive(f, g));
}
BENCHMARK(BM_ComposeNaive)->Args({1, 6})->Args({2, 5})->Args({3, 4})->Args({3, 6});

void BM_Polarize(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  Rng rng = make_rng(1, "bench/polarize");
  const TruncatedSeries fk = random_homogeneous(rng, 3, 1, k, k);
  for (auto _ : state) benchmark::DoNotOptimize(polarize(fk, k));
}
BENCHMARK(BM_Polarize)->DenseRange(1, 4);

void BM_Curry(benchmark::State& state) {
  Rng rng = make_rng(1, "bench/curry");
  const TruncatedSeries f = random_series(rng, 4, 2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(uncurry(curry(f, 2)));
}
BENCHMARK(BM_Curry)->DenseRange(2, 6, 2);

void BM_BangMap(benchmark::State& state) {
  const auto D = static_cast<unsigned>(state.range(0));
  Rng rng = make_rng(1, "bench/bang");
  const TruncatedSeries f = random_series(rng, 3, 3, D);
  for (auto _ : state) benchmark::DoNotOptimize(bang_map(f, D));
}
BENCHMARK(BM_BangMap)->DenseRange(2, 6, 2);

void BM_Convolve(benchmark::State& state) {
  const auto D = static_cast<unsigned>(state.range(0));
  Rng rng = make_rng(1, "bench/convolve");
  const Distribution a = random_distribution(rng, 3, D), b = random_distribution(rng, 3, D);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(a, b));
}
BENCHMARK(BM_Convolve)->DenseRange(2, 8, 2);

void BM_Comultiplication(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto D = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(comultiplication(m, D, D));
}
BENCHMARK(BM_Comultiplication)->Args({1, 2})->Args({2, 2})->Args({1, 4});

void BM_DslRoundTrip(benchmark::State& state) {
  const std::string src =
      "(let f (series :dom 2 :cod 1 :deg 4 {(1,0)->1, (2,1)->[0.5,-1], (0,4)->3}))\n"
      "(apply (theta 3 [1,0,0.5,0] 4) (compose f (identity 2 4)))\n";
  for (auto _ : state) benchmark::DoNotOptimize(print_program(parse_program(src)));
}
BENCHMARK(BM_DslRoundTrip);

void BM_LawSuite(benchmark::State& state) {
  LawConfig cfg;
  cfg.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg));
}
BENCHMARK(BM_LawSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
