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
#ifndef IRR_IDEALIZATION_HPP
#define IRR_IDEALIZATION_HPP

#include <cstddef>
#include <vector>

#include "irr/artinian.hpp"
#include "irr/local_ring.hpp"

namespace irr {

/// R ⋉ M presented as k[x, e] / (lift(relations of R), sum_j U_ji e_j, e_i e_j).
/// The relation ideal is graded by e-degree, so every standard basis splits
/// into an x-part (a copy of R) and an e-linear part (a copy of M).
class IdealizationRing {
 public:
  /// Throws PreconditionError when x-variables plus e-variables exceed the
  /// monomial capacity.
  static IdealizationRing create(const PresentedModule& module);

  const RingPtr& ring() const noexcept { return ring_; }
  const RingPtr& base() const noexcept { return module_.ring(); }
  const PresentedModule& module() const noexcept { return module_; }
  std::size_t num_base_variables() const noexcept { return base_vars_; }
  std::size_t rank() const noexcept { return module_.rank(); }

  Polynomial lift(const Polynomial& base_element) const;
  /// sum_j v_j e_j.
  Polynomial lift(const FreeVector& module_element) const;
  Polynomial e(std::size_t j) const;
  /// Degree of a monomial of A in the e-variables.
  unsigned e_degree(const Monomial& m) const;

  /// A / (x_1^c, ..., x_d^c); the e-variables are left untouched.
  AlgebraPtr truncation(unsigned c) const;
  /// Span of the standard monomials of positive e-degree.
  Subspace e_part(const ArtinianAlgebra& quotient) const;
  /// Span of the standard monomials of e-degree zero.
  Subspace x_part(const ArtinianAlgebra& quotient) const;

 private:
  IdealizationRing(PresentedModule module, RingPtr ring, std::size_t base_vars)
      : module_(std::move(module)), ring_(std::move(ring)),
        base_vars_(base_vars) {}

  PresentedModule module_;
  RingPtr ring_;
  std::size_t base_vars_;
};

IdealizationRing idealize(const PresentedModule& module);

/// J = I (R ⋉ M), generated by the lifts of the generators of I.
IdealHandle extend_ideal(const IdealizationRing& a, const IdealHandle& ideal);

/// I × N with I M ⊆ N.
struct HomogeneousIdeal {
  std::vector<Polynomial> ring_part;    // generators of I, over R
  std::vector<FreeVector> module_part;  // generators of N, inside M
};

/// Throws PreconditionError("not an ideal: IM ⊄ N") when I M ⊄ N.
HomogeneousIdeal homogeneous_ideal(const IdealizationRing& a,
                                   std::vector<Polynomial> ring_part,
                                   std::vector<FreeVector> module_part,
                                   const EngineOptions& opts = {});

/// Generators of I × N inside A.
std::vector<Polynomial> realize(const IdealizationRing& a,
                                const HomogeneousIdeal& p);

/// Least c with (x^c) ⊆ I and (x^c) M ⊆ N; A / (x^c) then carries both
/// colons exactly.
unsigned common_truncation(const IdealizationRing& a, const HomogeneousIdeal& p,
                           const EngineOptions& opts = {});

struct LemmaColon {
  HomogeneousIdeal colon;
  unsigned truncation = 0;
};

/// ((I : I') ∩ (N :_R N')) × (N :_M I'), computed in R / (x^c) and
/// M / (x^c) M. Generators of the answer include the pure powers x_i^c.
LemmaColon colon_via_lemma(const IdealizationRing& a, const HomogeneousIdeal& p,
                           const HomogeneousIdeal& q,
                           const EngineOptions& opts = {});

/// {f in A / (x^c) : f q ⊆ p} by linear algebra in the quotient algebra.
Subspace colon_direct(const IdealizationRing& a, const HomogeneousIdeal& p,
                      const HomogeneousIdeal& q, unsigned c);

/// The ideal generated by \p p inside A / (x^c).
Subspace realize_in_truncation(const IdealizationRing& a,
                               const HomogeneousIdeal& p, unsigned c);

struct ColonComparison {
  bool equal = false;
  unsigned truncation = 0;
  Subspace via_lemma;
  Subspace direct;
};

ColonComparison compare_colons(const IdealizationRing& a,
                               const HomogeneousIdeal& p,
                               const HomogeneousIdeal& q,
                               const EngineOptions& opts = {});

}  // namespace irr

#endif  // IRR_IDEALIZATION_HPP
