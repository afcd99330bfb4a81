// Copyright 2026 The irr Authors
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

#include <string>
#include <vector>

#include "irr/groebner.hpp"
#include "irr/harness/fuzz.hpp"
#include "irr/harness/parser.hpp"
#include "irr/idealization.hpp"
#include "irr/invariants.hpp"
#include "irr/local_ring.hpp"

namespace {

using namespace irr;

PolyRingPtr ambient(std::vector<std::string> vars) {
  return PolyRing::make(Field::prime(32003), std::move(vars),
                        MonomialOrder::degrevlex());
}

std::vector<Polynomial> parse(const PolyRingPtr& r,
                              const std::vector<std::string>& srcs) {
  std::vector<Polynomial> out;
  for (const auto& s : srcs) out.push_back(harness::parse_polynomial(s, r));
  return out;
}

RingPtr presented(std::vector<std::string> vars,
                  const std::vector<std::string>& relations) {
  auto r = ambient(std::move(vars));
  return PresentedRing::create(r, parse(r, relations));
}

RingPtr curve345() {
  return presented({"x1", "x2", "x3"},
                   {"x1*x3 - x2^2", "x1^3 - x2*x3", "x1^2*x2 - x3^2"});
}

void BM_BuchbergerCurve345PlusPower(benchmark::State& state) {
  const auto r = ambient({"x1", "x2", "x3"});
  auto gens = parse(r, {"x1*x3 - x2^2", "x1^3 - x2*x3", "x1^2*x2 - x3^2"});
  const int n = static_cast<int>(state.range(0));
  for (const auto& v : {"x1", "x2", "x3"}) {
    gens.push_back(harness::parse_polynomial(
        std::string(v) + "^" + std::to_string(n), r));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(gens));
  }
}
BENCHMARK(BM_BuchbergerCurve345PlusPower)->Arg(4)->Arg(8)->Arg(12);

void BM_IrTableCurve345(benchmark::State& state) {
  const auto ring = curve345();
  const auto module = PresentedModule::free(ring, 1);
  const auto m = maximal_ideal(ring);
  const auto n_max = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ir_table(module, m, n_max));
  }
}
BENCHMARK(BM_IrTableCurve345)->Arg(3)->Arg(6);

void BM_TheoremCheckSyzygy(benchmark::State& state) {
  const auto ring = curve345();
  const auto module = PresentedModule::from_ideal(
      ring, parse(ring->ambient(), {"x1", "x2"}));
  const auto m = maximal_ideal(ring);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(theorem_check(module, m, n));
  }
}
BENCHMARK(BM_TheoremCheckSyzygy)->Arg(0)->Arg(1)->Arg(2);

void BM_ColonLemmaVsDirect(benchmark::State& state) {
  const auto ring = presented({"x1", "x2"}, {"x1^3 - x2^2"});
  const auto r = ring->ambient();
  const IdealizationRing a = idealize(PresentedModule::free(ring, 1));
  const auto p = homogeneous_ideal(a, parse(r, {"x1^2", "x1*x2"}),
                                   {FreeVector(parse(r, {"x1"}))});
  const auto q = homogeneous_ideal(a, parse(r, {"x1", "x2"}),
                                   {FreeVector(parse(r, {"1"}))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare_colons(a, p, q));
  }
}
BENCHMARK(BM_ColonLemmaVsDirect);

}  // namespace

BENCHMARK_MAIN();
