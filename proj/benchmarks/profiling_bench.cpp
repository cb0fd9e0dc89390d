// Copyright 2026 The Lakecat Authors
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

#include <optional>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "lakecat/profiler/stats.hpp"

namespace {

using namespace lakecat::profiler;

void BM_NumericStats(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-1e3, 1e3);
  std::vector<std::optional<double>> col(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (i % 17 != 0) col[i] = d(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(compute_numeric_stats(col));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NumericStats)->Arg(1'000)->Arg(100'000);

void BM_NominalStats(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::vector<std::optional<std::string>> col(static_cast<std::size_t>(state.range(0)));
  for (auto& c : col) c = "v" + std::to_string(rng() % 500);
  for (auto _ : state) benchmark::DoNotOptimize(compute_nominal_stats(col));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NominalStats)->Arg(1'000)->Arg(100'000);

}  // namespace
