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

#include <random>

#include "qdiag/dsl.h"
#include "qdiag/planner.h"
#include "qdiag/tensor.h"

using namespace qdiag;

namespace {

/// Closed ring of n three-leg tensors on a bond of dimension d, one open site leg each.
Diagram ring(std::size_t n, std::size_t d) {
    const Space bond{"k", d}, site{"s", 2};
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    Diagram out;
    for (std::size_t i = 0; i < n; i++) {
        std::vector<Complex> data(d * d * 2);
        for (auto &z : data) {
            z = Complex(g(rng), g(rng));
        }
        out.add_object(TensorObject("t", {open_leg(bond), open_leg(site), closed_leg(bond)}, data));
    }
    for (std::size_t i = 0; i < n; i++) {
        out.connect({i, 0}, {(i + 1) % n, 2});
    }
    return out;
}

void BM_contract_ring_declaration(benchmark::State &state) {
    auto d = ring(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(contract_all(d));
    }
}
BENCHMARK(BM_contract_ring_declaration)->Arg(4)->Arg(6)->Arg(8);

void BM_contract_ring_planned(benchmark::State &state) {
    auto d = ring(static_cast<std::size_t>(state.range(0)), 4);
    auto p = plan(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(contract_all(d, p.order));
    }
}
BENCHMARK(BM_contract_ring_planned)->Arg(4)->Arg(6)->Arg(8);

void BM_plan_greedy(benchmark::State &state) {
    auto d = ring(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(plan(d));
    }
}
BENCHMARK(BM_plan_greedy)->Arg(8)->Arg(16);

void BM_contract_legs_matrix(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    const Space s{"s", n};
    std::vector<Complex> data(n * n, Complex(0.5, 0.25));
    TensorObject m("m", {open_leg(s), closed_leg(s)}, data);
    for (auto _ : state) {
        benchmark::DoNotOptimize(contract_legs(m, 1, m, 0));
    }
}
BENCHMARK(BM_contract_legs_matrix)->Arg(4)->Arg(16)->Arg(64);

void BM_parse_serialize(benchmark::State &state) {
    std::string text = "space a 4\nspace b 4\n";
    for (int k = 0; k < 16; k++) {
        text += "obj t" + std::to_string(k) + " a+ b- =";
        for (int j = 0; j < 16; j++) {
            text += " (0.125,-0.5)";
        }
        text += "\n";
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(serialize(parse(text)));
    }
}
BENCHMARK(BM_parse_serialize);

}  // namespace

BENCHMARK_MAIN();
