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
#ifndef IRR_HARNESS_FUZZ_HPP
#define IRR_HARNESS_FUZZ_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "irr/idealization.hpp"
#include "irr/local_ring.hpp"

namespace irr::harness {

inline constexpr std::size_t kFuzzMaxLength = 12;

/// Artinian instance: R = F_p[x..] / (pure powers x_i^{2..4}, up to two
/// monomials, one binomial), M free of rank <= 2 or a quotient of R^{1..2}
/// by up to two random columns, I generated by up to two random elements of
/// the maximal ideal. Lengths of R and M are at most kFuzzMaxLength.
struct FuzzInstance {
  RingPtr ring;
  PresentedModule module;
  IdealHandle ideal;

  std::string describe() const;
};

struct LemmaCase {
  FuzzInstance base;
  HomogeneousIdeal p;
  HomogeneousIdeal q;
};

class FuzzGenerator {
 public:
  /// Cases draw from F_2 and F_3 alternately unless \p field is given.
  FuzzGenerator(std::uint64_t seed, std::optional<Field> field = {});

  FuzzInstance instance();
  LemmaCase lemma_case(const EngineOptions& opts = {});

 private:
  Monomial monomial(std::size_t nvars, unsigned min_deg, unsigned max_deg);
  Scalar nonzero(const Field& f);
  Polynomial element(const PolyRingPtr& ring, unsigned min_deg,
                     unsigned max_deg, unsigned terms);
  RingPtr ring();
  HomogeneousIdeal homogeneous(const IdealizationRing& a,
                               const EngineOptions& opts);
  std::size_t below(std::size_t n) { return rng_() % n; }

  std::mt19937_64 rng_;
  std::optional<Field> field_;
};

/// Independent stream for case \p index of a run seeded with \p seed.
std::uint64_t case_seed(std::uint64_t seed, std::size_t index);

struct FuzzSummary {
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Theorem verdicts for n = 0..n_max on every case.
FuzzSummary theorem_fuzz(std::uint64_t seed, std::size_t cases, unsigned n_max,
                         const EngineOptions& opts = {});
/// colon_via_lemma against colon_direct, plus homogeneity of the output.
FuzzSummary lemma_fuzz(std::uint64_t seed, std::size_t cases,
                       const EngineOptions& opts = {});
/// brute_force_socle against socle() on M / I^{n+1} M for n = 0..2.
FuzzSummary socle_fuzz(std::uint64_t seed, std::size_t cases,
                       const EngineOptions& opts = {});

}  // namespace irr::harness

#endif  // IRR_HARNESS_FUZZ_HPP
