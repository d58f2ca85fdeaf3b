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
#include "qdiag/channels.h"

using namespace qdiag;

namespace {

Isometry haar_isometry(std::size_t d, std::size_t d_e, std::uint64_t seed) {
    const Space a{"a", d}, b{"b", d}, e{"e", d_e}, f{"f", d_e};
    auto t = TensorObject::from_matrix(
        "T", {open_leg(b), open_leg(f)}, {closed_leg(a), closed_leg(e)}, haar_unitary(d * d_e, seed));
    return isometry_from_unitary(t, TensorObject::ket("e0", e, Vector::Unit(static_cast<Eigen::Index>(d_e), 0)));
}

void BM_channel_construction(benchmark::State &state) {
    auto d = static_cast<std::size_t>(state.range(0));
    auto v = haar_isometry(d, d, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Channel(v));
    }
}
BENCHMARK(BM_channel_construction)->Arg(2)->Arg(3)->Arg(4);

void BM_kraus_rank(benchmark::State &state) {
    auto d = static_cast<std::size_t>(state.range(0));
    Channel ch(haar_isometry(d, d, 4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kraus_rank(ch));
    }
}
BENCHMARK(BM_kraus_rank)->Arg(2)->Arg(3)->Arg(4);

void BM_cp_check(benchmark::State &state) {
    auto d = static_cast<std::size_t>(state.range(0));
    Channel ch(haar_isometry(d, d, 5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_completely_positive(ch.transition()));
    }
}
BENCHMARK(BM_cp_check)->Arg(2)->Arg(3)->Arg(4);

}  // namespace
