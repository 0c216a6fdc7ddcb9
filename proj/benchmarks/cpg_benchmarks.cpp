// Copyright 2026 The cpg Authors
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

#include <filesystem>
#include <random>

#include "cpg/decomposition.hpp"
#include "cpg/dynamics.hpp"
#include "cpg/game_io.hpp"
#include "cpg/nash.hpp"
#include "cpg/stability.hpp"

namespace {

cpg::BimatrixGame load(const char* file) {
  return cpg::load_game_file(std::filesystem::path(CPG_GAMES_DIR) / file);
}

cpg::BimatrixGame random_game(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  cpg::Matrix<cpg::Rational> a(n, n), b(n, n);
  std::vector<std::string> rows, cols;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back("r" + std::to_string(i));
    cols.push_back("c" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = cpg::Rational(dist(rng));
      b(i, j) = cpg::Rational(dist(rng));
    }
  }
  return cpg::BimatrixGame("bench", rows, cols, a, b);
}

void BM_SolveExact(benchmark::State& state) {
  const auto g = random_game(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(cpg::solve_bimatrix<cpg::Rational>(g));
}
BENCHMARK(BM_SolveExact)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_SolveFloat(benchmark::State& state) {
  const auto g = random_game(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(cpg::solve_bimatrix<double>(g));
}
BENCHMARK(BM_SolveFloat)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_Decompose(benchmark::State& state) {
  const auto g = random_game(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(cpg::decompose(g));
}
BENCHMARK(BM_Decompose)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_DecomposeLeduc(benchmark::State& state) {
  const auto g = load("leduc_empirical.json");
  for (auto _ : state) benchmark::DoNotOptimize(cpg::decompose(g));
}
BENCHMARK(BM_DecomposeLeduc)->Unit(benchmark::kMillisecond);

void BM_IntegrateCoupled(benchmark::State& state) {
  const auto sys = cpg::ReplicatorSystem::coupled(load("leduc_empirical.json"));
  const std::vector<cpg::FloatStrategy> init = {cpg::FloatStrategy({0.2, 0.5, 0.3}),
                                                cpg::FloatStrategy({0.6, 0.3, 0.1})};
  for (auto _ : state) benchmark::DoNotOptimize(cpg::integrate(sys, init, 0.01, 50));
}
BENCHMARK(BM_IntegrateCoupled)->Unit(benchmark::kMillisecond);

void BM_RestPointScan(benchmark::State& state) {
  const auto s = cpg::counterpart_games(random_game(static_cast<std::size_t>(state.range(0)), 3)).first;
  for (auto _ : state) benchmark::DoNotOptimize(cpg::scan_rest_points<cpg::Rational>(s));
}
BENCHMARK(BM_RestPointScan)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode from another GCC.
BENCHMARK_MAIN();
