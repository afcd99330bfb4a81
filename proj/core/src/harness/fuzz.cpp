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
#include "irr/harness/fuzz.hpp"

#include <array>

#include "irr/error.hpp"
#include "irr/harness/brute_force.hpp"
#include "irr/invariants.hpp"
#include "irr/parallel.hpp"

namespace irr::harness {

namespace {

const std::vector<std::string> kNames = {"x", "y", "z"};
constexpr int kMaxAttempts = 1000;

std::string join(const std::vector<Polynomial>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i)
    out += (i ? ", " : "") + ps[i].to_string();
  return out;
}

template <class Check>
FuzzSummary run_cases(std::uint64_t seed, std::size_t cases,
                      const EngineOptions& opts, Check check) {
  auto per_case = parallel_map(cases, opts.threads, [&](std::size_t i) {
    FuzzSummary s;
    FuzzGenerator gen(case_seed(seed, i));
    try {
      check(gen, s);
    } catch (const std::exception& e) {
      s.failures.push_back("case " + std::to_string(i) + ": " + e.what());
    }
    for (auto& f : s.failures)
      if (!f.starts_with("case ")) f = "case " + std::to_string(i) + ": " + f;
    return s;
  });
  FuzzSummary out;
  out.cases = cases;
  for (auto& s : per_case) {
    out.checks += s.checks;
    for (auto& f : s.failures) out.failures.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(std::uint64_t{index} >> 32)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (std::uint64_t{words[0]} << 32) | words[1];
}

std::string FuzzInstance::describe() const {
  std::string out = "R = " + ring->field().to_string() + "[" ;
  const auto& names = ring->ambient()->variables();
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  out += "]/(" + join(ring->relations()) + "); M = " + module.key() +
         "; I = (" + join(ideal.generators()) + ")";
  return out;
}

FuzzGenerator::FuzzGenerator(std::uint64_t seed, std::optional<Field> field)
    : rng_(seed), field_(field) {}

Monomial FuzzGenerator::monomial(std::size_t nvars, unsigned min_deg,
                                 unsigned max_deg) {
  const unsigned deg = min_deg + static_cast<unsigned>(below(max_deg - min_deg + 1));
  std::vector<unsigned> exps(nvars, 0);
  for (unsigned k = 0; k < deg; ++k) ++exps[below(nvars)];
  return Monomial::from_exponents(exps);
}

Scalar FuzzGenerator::nonzero(const Field& f) {
  const std::uint32_t p = f.is_rational() ? 5 : f.characteristic();
  return Scalar::from_int(f, 1 + static_cast<long long>(below(p - 1)));
}

Polynomial FuzzGenerator::element(const PolyRingPtr& ring, unsigned min_deg,
                                  unsigned max_deg, unsigned terms) {
  Polynomial out(ring);
  for (unsigned t = 0; t < terms; ++t)
    out = out + Polynomial::term(
                    ring, monomial(ring->num_variables(), min_deg, max_deg),
                    nonzero(ring->field()));
  return out;
}

RingPtr FuzzGenerator::ring() {
  const Field f = field_ ? *field_ : (below(2) ? Field::prime(2) : Field::prime(3));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::size_t n = 1 + below(3);
    const auto amb = PolyRing::make(
        f, std::vector<std::string>(kNames.begin(), kNames.begin() + n));
    std::vector<Polynomial> rels;
    for (std::size_t i = 0; i < n; ++i)
      rels.push_back(Polynomial::term(
          amb, Monomial::variable(n, i, 2 + static_cast<unsigned>(below(3))),
          Scalar::one(f)));
    const std::size_t extra = below(3);
    for (std::size_t k = 0; k < extra; ++k)
      rels.push_back(Polynomial::term(amb, monomial(n, 2, 3), Scalar::one(f)));
    const Monomial a = monomial(n, 1, 3), b = monomial(n, 1, 3);
    if (!(a == b))
      rels.push_back(Polynomial::term(amb, a, Scalar::one(f)) -
                     Polynomial::term(amb, b, nonzero(f)));
    auto r = PresentedRing::create(amb, std::move(rels));
    if (build_algebra(r->relation_basis())->dim() <= kFuzzMaxLength) return r;
  }
  throw InvariantViolation("fuzz generator found no small ring");
}

FuzzInstance FuzzGenerator::instance() {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const RingPtr r = ring();
    const auto& amb = r->ambient();
    const AlgebraPtr alg = build_algebra(r->relation_basis());
    const std::size_t rank = 1 + below(2);
    std::vector<FreeVector> cols;
    if (below(3) == 0) {
      const std::size_t count = 1 + below(2);
      for (std::size_t c = 0; c < count; ++c) {
        std::vector<Polynomial> entries;
        for (std::size_t j = 0; j < rank; ++j)
          entries.push_back(element(amb, 1, 2, static_cast<unsigned>(below(3))));
        cols.emplace_back(std::move(entries));
      }
    }
    const auto module = PresentedModule::from_presentation(r, rank, cols);
    const std::size_t len = module_model(alg, rank, module.columns()).dim();
    if (len == 0 || len > kFuzzMaxLength) continue;
    std::vector<Polynomial> gens;
    const std::size_t count = 1 + below(2);
    for (std::size_t g = 0; g < count; ++g)
      gens.push_back(element(amb, 1, 2, 1 + static_cast<unsigned>(below(2))));
    return {r, module, IdealHandle(r, std::move(gens))};
  }
  throw InvariantViolation("fuzz generator found no small module");
}

HomogeneousIdeal FuzzGenerator::homogeneous(const IdealizationRing& a,
                                            const EngineOptions& opts) {
  const auto& amb = a.base()->ambient();
  std::vector<Polynomial> ring_part;
  const std::size_t count = below(3);
  for (std::size_t g = 0; g < count; ++g)
    ring_part.push_back(element(amb, 1, 2, 1 + static_cast<unsigned>(below(2))));
  std::vector<FreeVector> module_part;
  for (const auto& g : ring_part)
    for (std::size_t j = 0; j < a.rank(); ++j)
      module_part.push_back(g * FreeVector::unit(amb, a.rank(), j));
  const std::size_t extra = below(3);
  for (std::size_t k = 0; k < extra; ++k) {
    std::vector<Polynomial> entries;
    for (std::size_t j = 0; j < a.rank(); ++j)
      entries.push_back(element(amb, 0, 2, static_cast<unsigned>(below(2))));
    module_part.emplace_back(std::move(entries));
  }
  return homogeneous_ideal(a, std::move(ring_part), std::move(module_part),
                           opts);
}

LemmaCase FuzzGenerator::lemma_case(const EngineOptions& opts) {
  FuzzInstance base = instance();
  const IdealizationRing a = idealize(base.module);
  HomogeneousIdeal p = homogeneous(a, opts);
  HomogeneousIdeal q = homogeneous(a, opts);
  return {std::move(base), std::move(p), std::move(q)};
}

FuzzSummary theorem_fuzz(std::uint64_t seed, std::size_t cases, unsigned n_max,
                         const EngineOptions& opts) {
  EngineOptions inner = opts;
  inner.threads = 1;
  return run_cases(seed, cases, opts, [&](FuzzGenerator& gen, FuzzSummary& s) {
    const FuzzInstance inst = gen.instance();
    for (unsigned n = 0; n <= n_max; ++n) {
      const TheoremVerdict v = theorem_check(inst.module, inst.ideal, n, inner);
      ++s.checks;
      for (const auto& why : v.violations)
        s.failures.push_back("n = " + std::to_string(n) + ": " + why + " [" +
                             inst.describe() + "]");
    }
  });
}

FuzzSummary lemma_fuzz(std::uint64_t seed, std::size_t cases,
                       const EngineOptions& opts) {
  EngineOptions inner = opts;
  inner.threads = 1;
  return run_cases(seed, cases, opts, [&](FuzzGenerator& gen, FuzzSummary& s) {
    const LemmaCase c = gen.lemma_case(inner);
    const IdealizationRing a = idealize(c.base.module);
    const ColonComparison cmp = compare_colons(a, c.p, c.q, inner);
    ++s.checks;
    if (!cmp.equal)
      s.failures.push_back("lemma colon (dim " +
                           std::to_string(cmp.via_lemma.dim()) +
                           ") differs from direct colon (dim " +
                           std::to_string(cmp.direct.dim()) + ") [" +
                           c.base.describe() + "]");
    const LemmaColon lemma = colon_via_lemma(a, c.p, c.q, inner);
    try {
      homogeneous_ideal(a, lemma.colon.ring_part, lemma.colon.module_part,
                        inner);
    } catch (const PreconditionError& e) {
      s.failures.push_back(std::string("lemma output not homogeneous: ") +
                           e.what());
    }
  });
}

FuzzSummary socle_fuzz(std::uint64_t seed, std::size_t cases,
                       const EngineOptions& opts) {
  EngineOptions inner = opts;
  inner.threads = 1;
  return run_cases(seed, cases, opts, [&](FuzzGenerator& gen, FuzzSummary& s) {
    const FuzzInstance inst = gen.instance();
    for (unsigned n = 0; n <= 2; ++n) {
      const QuotientModel q = artinian_quotient(inst.module, inst.ideal, n, inner);
      const std::size_t fast = socle(*q.module).dim();
      const std::size_t slow = brute_force_socle(*q.module);
      ++s.checks;
      if (fast != slow)
        s.failures.push_back("n = " + std::to_string(n) + ": socle " +
                             std::to_string(fast) + " vs enumeration " +
                             std::to_string(slow) + " [" + inst.describe() +
                             "]");
    }
  });
}

}  // namespace irr::harness
