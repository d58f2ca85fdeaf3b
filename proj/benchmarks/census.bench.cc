// Copyright 2026 The qdiag Authors
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

#include "qdiag/census.h"

using namespace qdiag;

namespace {

void BM_haar_unitary(benchmark::State &state) {
    auto d = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(haar_unitary(d, seed++));
    }
}
BENCHMARK(BM_haar_unitary)->Arg(4)->Arg(9)->Arg(16);

void BM_cross_rank(benchmark::State &state) {
    auto d = static_cast<std::size_t>(state.range(0));
    Matrix u = haar_unitary(d * d, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cross_rank(u, d, d));
    }
}
BENCHMARK(BM_cross_rank)->Arg(2)->Arg(3)->Arg(4);

void BM_rank_census(benchmark::State &state) {
    CensusConfig cfg{.d_a = 2, .d_e = 2, .n = static_cast<std::size_t>(state.range(0)), .seed = 9, .structured = true};
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_census(cfg));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * state.range(0)));
}
BENCHMARK(BM_rank_census)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
