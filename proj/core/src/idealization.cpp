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
#include "irr/idealization.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "irr/error.hpp"

namespace irr {

namespace {

Polynomial lift_into(const PolyRingPtr& target, const Polynomial& p) {
  const std::size_t d = p.ring()->num_variables();
  std::vector<unsigned> exps(target->num_variables(), 0);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < d; ++i) exps[i] = t.monomial[i];
    terms.push_back({Monomial::from_exponents(exps), t.coefficient});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial lift_vector_into(const PolyRingPtr& target, std::size_t base_vars,
                            const FreeVector& v) {
  Polynomial out(target);
  for (std::size_t j = 0; j < v.rank(); ++j)
    out = out + lift_into(target, v[j]) *
                    Polynomial::variable(target, base_vars + j);
  return out;
}

std::vector<Vector> ring_coordinates(const ArtinianAlgebra& alg,
                                     const std::vector<Polynomial>& gens) {
  std::vector<Vector> out;
  for (const auto& g : gens) out.push_back(alg.coordinates(g));
  return out;
}

std::vector<Vector> module_coordinates(const ArtinianModule& model,
                                       const std::vector<FreeVector>& gens) {
  std::vector<Vector> out;
  for (const auto& g : gens) out.push_back(model.coordinates(g));
  return out;
}

Subspace graded_part(const ArtinianAlgebra& quotient,
                     const IdealizationRing& a, bool positive) {
  std::vector<Vector> units;
  const auto& basis = quotient.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if ((a.e_degree(basis[i].monomial) > 0) == positive)
      units.push_back(unit_vector(quotient.field(), quotient.dim(), i));
  return Subspace::span(quotient.field(), quotient.dim(), units);
}

}  // namespace

IdealizationRing IdealizationRing::create(const PresentedModule& module) {
  const auto& base = module.ring();
  const auto& amb = base->ambient();
  const std::size_t d = amb->num_variables();
  const std::size_t s = module.rank();
  if (d + s > kMaxVariables)
    throw PreconditionError("idealization needs " + std::to_string(d + s) +
                            " variables, more than the supported " +
                            std::to_string(kMaxVariables));
  std::vector<std::string> names = amb->variables();
  const std::set<std::string> taken(names.begin(), names.end());
  for (std::size_t j = 0; j < s; ++j) {
    std::string name = "e" + std::to_string(j + 1);
    while (taken.contains(name)) name = "_" + name;
    names.push_back(name);
  }
  const auto target = PolyRing::make(amb->field(), names);

  std::vector<Polynomial> rels;
  for (const auto& r : base->relations()) rels.push_back(lift_into(target, r));
  for (const auto& col : module.columns())
    rels.push_back(lift_vector_into(target, d, col));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j)
      rels.push_back(Polynomial::variable(target, d + i) *
                     Polynomial::variable(target, d + j));
  return IdealizationRing(module, PresentedRing::create(target, std::move(rels)),
                          d);
}

Polynomial IdealizationRing::lift(const Polynomial& base_element) const {
  if (!same_ring(base_element.ring(), base()->ambient()))
    throw MismatchError("element is not over the base ring");
  return lift_into(ring_->ambient(), base_element);
}

Polynomial IdealizationRing::lift(const FreeVector& module_element) const {
  if (module_element.rank() != rank() ||
      !same_ring(module_element.ring(), base()->ambient()))
    throw MismatchError("element is not in the module");
  return lift_vector_into(ring_->ambient(), base_vars_, module_element);
}

Polynomial IdealizationRing::e(std::size_t j) const {
  if (j >= rank()) throw PreconditionError("e-variable index out of range");
  return Polynomial::variable(ring_->ambient(), base_vars_ + j);
}

unsigned IdealizationRing::e_degree(const Monomial& m) const {
  unsigned deg = 0;
  for (std::size_t j = 0; j < rank(); ++j) deg += m[base_vars_ + j];
  return deg;
}

AlgebraPtr IdealizationRing::truncation(unsigned c) const {
  const std::string key = "x-powers|" + std::to_string(c);
  if (auto alg = ring_->cached_algebra(key)) return alg;
  std::vector<Polynomial> gens = ring_->relations();
  const auto& amb = ring_->ambient();
  for (std::size_t i = 0; i < base_vars_; ++i)
    gens.push_back(Polynomial::term(
        amb, Monomial::variable(amb->num_variables(), i, c),
        Scalar::one(amb->field())));
  return ring_->store_algebra(key, build_algebra(buchberger(amb, gens)));
}

Subspace IdealizationRing::e_part(const ArtinianAlgebra& quotient) const {
  return graded_part(quotient, *this, true);
}

Subspace IdealizationRing::x_part(const ArtinianAlgebra& quotient) const {
  return graded_part(quotient, *this, false);
}

IdealizationRing idealize(const PresentedModule& module) {
  return IdealizationRing::create(module);
}

IdealHandle extend_ideal(const IdealizationRing& a, const IdealHandle& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(a.lift(g));
  return IdealHandle(a.ring(), std::move(gens));
}

HomogeneousIdeal homogeneous_ideal(const IdealizationRing& a,
                                   std::vector<Polynomial> ring_part,
                                   std::vector<FreeVector> module_part,
                                   const EngineOptions& opts) {
  const auto& amb = a.base()->ambient();
  for (const auto& g : ring_part)
    if (!same_ring(g.ring(), amb))
      throw MismatchError("ring part is not over the base ring");
  for (const auto& v : module_part)
    if (v.rank() != a.rank() || !same_ring(v.ring(), amb))
      throw MismatchError("module part is not inside the module");
  std::vector<FreeVector> products;
  for (const auto& g : ring_part)
    for (std::size_t j = 0; j < a.rank(); ++j)
      products.push_back(g * FreeVector::unit(amb, a.rank(), j));
  if (!products.empty() &&
      !module_contains(a.module(), module_part, products, opts))
    throw PreconditionError("not an ideal: IM ⊄ N");
  return {std::move(ring_part), std::move(module_part)};
}

std::vector<Polynomial> realize(const IdealizationRing& a,
                                const HomogeneousIdeal& p) {
  std::vector<Polynomial> out;
  for (const auto& g : p.ring_part) out.push_back(a.lift(g));
  for (const auto& v : p.module_part) out.push_back(a.lift(v));
  return out;
}

unsigned common_truncation(const IdealizationRing& a, const HomogeneousIdeal& p,
                           const EngineOptions& opts) {
  const unsigned ring_c = primary_exponent(
      a.base(), IdealHandle(a.base(), p.ring_part), opts.primary_bound);
  const unsigned module_c =
      module_exponent(a.module(), p.module_part, opts.primary_bound);
  return std::max({1u, ring_c, module_c});
}

LemmaColon colon_via_lemma(const IdealizationRing& a, const HomogeneousIdeal& p,
                           const HomogeneousIdeal& q,
                           const EngineOptions& opts) {
  const unsigned c = common_truncation(a, p, opts) + opts.truncation_extra;
  const auto& module = a.module();
  const AlgebraPtr ring_bar = power_truncation(a.base(), c);
  const ArtinianModule regular = ArtinianModule::regular(ring_bar);
  const ArtinianModule module_bar =
      module_model(ring_bar, module.rank(), module.columns());

  const auto i_gens = ring_coordinates(*ring_bar, p.ring_part);
  const auto i2_gens = ring_coordinates(*ring_bar, q.ring_part);
  const auto n_gens = module_coordinates(module_bar, p.module_part);
  const auto n2_gens = module_coordinates(module_bar, q.module_part);

  const Subspace i_bar = ideal_span(*ring_bar, i_gens);
  const Subspace n_bar = submodule_span(module_bar, n_gens);
  const Subspace ring_part = module_colon(regular, i_bar, i2_gens)
                                 .intersect(ring_colon(module_bar, n_bar, n2_gens));
  const Subspace module_part = module_colon(module_bar, n_bar, i2_gens);

  const auto& amb = a.base()->ambient();
  HomogeneousIdeal out;
  for (const auto& v : ring_part.basis()) out.ring_part.push_back(ring_bar->lift(v));
  const auto powers = pure_powers(amb, c);
  out.ring_part.insert(out.ring_part.end(), powers.begin(), powers.end());
  for (const auto& v : module_part.basis())
    out.module_part.push_back(module_bar.lift(v));
  for (const auto& x : powers)
    for (std::size_t j = 0; j < module.rank(); ++j)
      out.module_part.push_back(x * FreeVector::unit(amb, module.rank(), j));
  return {std::move(out), c};
}

Subspace realize_in_truncation(const IdealizationRing& a,
                               const HomogeneousIdeal& p, unsigned c) {
  const AlgebraPtr alg = a.truncation(c);
  return ideal_span(*alg, ring_coordinates(*alg, realize(a, p)));
}

Subspace colon_direct(const IdealizationRing& a, const HomogeneousIdeal& p,
                      const HomogeneousIdeal& q, unsigned c) {
  const AlgebraPtr alg = a.truncation(c);
  const ArtinianModule regular = ArtinianModule::regular(alg);
  return module_colon(regular, realize_in_truncation(a, p, c),
                      ring_coordinates(*alg, realize(a, q)));
}

ColonComparison compare_colons(const IdealizationRing& a,
                               const HomogeneousIdeal& p,
                               const HomogeneousIdeal& q,
                               const EngineOptions& opts) {
  const LemmaColon lemma = colon_via_lemma(a, p, q, opts);
  Subspace via_lemma = realize_in_truncation(a, lemma.colon, lemma.truncation);
  Subspace direct = colon_direct(a, p, q, lemma.truncation);
  const bool equal = via_lemma == direct;
  return {equal, lemma.truncation, std::move(via_lemma), std::move(direct)};
}

}  // namespace irr
