// Copyright 2026 The cyclomat Authors
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

#include <benchmark/benchmark.h>

#include "cyclomat/classify.hpp"
#include "cyclomat/equivalence.hpp"
#include "cyclomat/families.hpp"
#include "cyclomat/spectra.hpp"

namespace cyclomat {
namespace {

void BM_CanonicalForm(benchmark::State& state) {
  const Digraph g = generate(FamilyId::Of(Family::L, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 12, 4);

void BM_CharPoly(benchmark::State& state) {
  const Digraph g = generate(FamilyId::Of(Family::Atilde, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
}
BENCHMARK(BM_CharPoly)->RangeMultiplier(2)->Range(4, 32);

void BM_Enumerate(benchmark::State& state) {
  SearchConstraints c;
  c.max_order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(c).representatives.size());
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cyclomat

BENCHMARK_MAIN();
