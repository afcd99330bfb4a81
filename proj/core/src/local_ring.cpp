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
#include "irr/local_ring.hpp"

#include <algorithm>

#include "irr/error.hpp"

namespace irr {

namespace {

std::string join_key(const std::vector<Polynomial>& gens) {
  std::string key;
  for (const auto& g : gens) {
    key += g.to_string();
    key += ';';
  }
  return key;
}

void all_monomials(std::size_t n, unsigned degree, std::size_t var,
                   std::vector<unsigned>& exps, std::vector<Monomial>& out) {
  if (var + 1 == n) {
    exps[var] = degree;
    out.push_back(Monomial::from_exponents(exps));
    exps[var] = 0;
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    exps[var] = e;
    all_monomials(n, degree - e, var + 1, exps, out);
  }
  exps[var] = 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned degree) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (degree == 0) out.push_back(Monomial(0));
    return out;
  }
  std::vector<unsigned> exps(n, 0);
  all_monomials(n, degree, 0, exps, out);
  return out;
}

std::vector<Polynomial> monomial_generators(const PolyRingPtr& ring,
                                            unsigned degree) {
  std::vector<Polynomial> out;
  for (const auto& m : monomials_of_degree(ring->num_variables(), degree))
    out.push_back(Polynomial::term(ring, m, Scalar::one(ring->field())));
  return out;
}

void require_local_element(const Polynomial& p, const char* what) {
  if (!p.constant_coefficient().is_zero())
    throw PreconditionError(std::string(what) + " " + p.to_string() +
                            " is a unit, not an element of the maximal ideal");
}

// Reduces modulo the relations, drops zeros and duplicates, then removes
// every generator that lies in the ideal of the others.
std::vector<Polynomial> minimalize(const PresentedRing& ring,
                                   std::vector<Polynomial> cands) {
  const auto& ord = ring.ambient()->order();
  std::vector<Polynomial> reduced;
  for (auto& c : cands) {
    Polynomial r = ring.reduce(c).monic();
    if (r.is_zero()) continue;
    if (std::find(reduced.begin(), reduced.end(), r) != reduced.end()) continue;
    reduced.push_back(std::move(r));
  }
  std::stable_sort(reduced.begin(), reduced.end(),
                   [&](const Polynomial& a, const Polynomial& b) {
                     return ord.compare(a.leading_monomial(),
                                        b.leading_monomial()) < 0;
                   });
  std::vector<Polynomial> kept;
  for (auto& r : reduced) {
    if (!kept.empty()) {
      std::vector<Polynomial> gens = ring.relations();
      gens.insert(gens.end(), kept.begin(), kept.end());
      if (buchberger(ring.ambient(), gens).contains(r)) continue;
    }
    kept.push_back(std::move(r));
  }
  // A small generator can become redundant once larger ones are in, e.g.
  // x2^2 = x1^3 modulo x1^3 - x2^2; drop those largest-first.
  for (std::size_t i = kept.size(); i-- > 0 && kept.size() > 1;) {
    std::vector<Polynomial> gens = ring.relations();
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) gens.push_back(kept[j]);
    if (buchberger(ring.ambient(), gens).contains(kept[i]))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return kept;
}

std::vector<Polynomial> products(const std::vector<Polynomial>& a,
                                 const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  for (const auto& p : a)
    for (const auto& q : b) out.push_back(p * q);
  return out;
}

bool reduces_to_zero(const GroebnerBasis& gb,
                     const std::vector<Polynomial>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Polynomial& g) { return gb.contains(g); });
}

std::vector<FreeVector> relation_multiples(const PresentedModule& module,
                                           const std::vector<Polynomial>& rels) {
  const auto& amb = module.ring()->ambient();
  std::vector<FreeVector> out;
  for (const auto& r : rels)
    for (std::size_t j = 0; j < module.rank(); ++j)
      out.push_back(r * FreeVector::unit(amb, module.rank(), j));
  return out;
}

bool all_contained(const GroebnerBasis& gb,
                   const std::vector<FreeVector>& vectors) {
  return std::all_of(vectors.begin(), vectors.end(),
                     [&](const FreeVector& v) { return gb.contains(v); });
}

}  // namespace

std::vector<Polynomial> pure_powers(const PolyRingPtr& ring, unsigned power) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < ring->num_variables(); ++i)
    out.push_back(Polynomial::term(
        ring, Monomial::variable(ring->num_variables(), i, power),
        Scalar::one(ring->field())));
  return out;
}

AlgebraPtr power_truncation(const RingPtr& ring, unsigned c) {
  const std::string key = "pure-powers|" + std::to_string(c);
  if (auto alg = ring->cached_algebra(key)) return alg;
  std::vector<Polynomial> gens = ring->relations();
  const auto powers = pure_powers(ring->ambient(), c);
  gens.insert(gens.end(), powers.begin(), powers.end());
  return ring->store_algebra(key,
                             build_algebra(buchberger(ring->ambient(), gens)));
}

bool module_contains(const PresentedModule& module,
                     const std::vector<FreeVector>& sub,
                     const std::vector<FreeVector>& vectors,
                     const EngineOptions& opts) {
  const auto& ring = module.ring();
  const auto& amb = ring->ambient();
  std::vector<FreeVector> gens = module.columns();
  gens.insert(gens.end(), sub.begin(), sub.end());
  const auto rel = relation_multiples(module, ring->relations());
  gens.insert(gens.end(), rel.begin(), rel.end());
  if (all_contained(module_groebner(amb, module.rank(), gens), vectors))
    return true;
  unsigned c = 0;
  try {
    c = std::max(1u, module_exponent(module, sub, opts.primary_bound));
  } catch (const NotPrimaryError&) {
    // N is not m-primary in M, so no exact truncation exists. A vector
    // outside N + m^k M for some k is still certainly outside N.
    const unsigned witness_bound = std::min(opts.primary_bound, 12u);
    for (unsigned k = 1; k <= witness_bound; ++k) {
      const AlgebraPtr alg = build_algebra(truncated_basis(ring, {}, k));
      const ArtinianModule model =
          module_model(alg, module.rank(), module.columns(), sub);
      for (const auto& v : vectors)
        if (!is_zero(model.coordinates(v))) return false;
    }
    throw;
  }
  const auto trunc = relation_multiples(module, pure_powers(amb, c));
  gens.insert(gens.end(), trunc.begin(), trunc.end());
  return all_contained(module_groebner(amb, module.rank(), gens), vectors);
}

PresentedRing::PresentedRing(PolyRingPtr ambient,
                             std::vector<Polynomial> relations,
                             GroebnerBasis basis)
    : ambient_(std::move(ambient)),
      relations_(std::move(relations)),
      basis_(std::move(basis)) {}

std::shared_ptr<const PresentedRing> PresentedRing::create(
    PolyRingPtr ambient, std::vector<Polynomial> relations) {
  std::vector<Polynomial> kept;
  for (auto& r : relations) {
    if (!same_ring(ambient, r.ring()))
      throw MismatchError("relation belongs to a different ambient ring");
    if (r.is_zero()) continue;
    require_local_element(r, "relation");
    kept.push_back(std::move(r));
  }
  GroebnerBasis gb = buchberger(ambient, kept);
  return std::make_shared<const PresentedRing>(std::move(ambient),
                                               std::move(kept), std::move(gb));
}

std::vector<Polynomial> PresentedRing::variables() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < num_variables(); ++i)
    out.push_back(Polynomial::variable(ambient_, i));
  return out;
}

std::optional<unsigned> PresentedRing::cached_exponent(
    const std::string& key) const {
  std::lock_guard lock(mutex_);
  const auto it = exponents_.find(key);
  if (it == exponents_.end()) return std::nullopt;
  return it->second;
}

void PresentedRing::store_exponent(const std::string& key,
                                   unsigned value) const {
  std::lock_guard lock(mutex_);
  exponents_.emplace(key, value);
}

AlgebraPtr PresentedRing::cached_algebra(const std::string& key) const {
  std::lock_guard lock(mutex_);
  const auto it = algebras_.find(key);
  return it == algebras_.end() ? nullptr : it->second;
}

AlgebraPtr PresentedRing::store_algebra(const std::string& key,
                                        AlgebraPtr alg) const {
  std::lock_guard lock(mutex_);
  return algebras_.emplace(key, std::move(alg)).first->second;
}

ModelPtr PresentedRing::cached_model(const std::string& key) const {
  std::lock_guard lock(mutex_);
  const auto it = models_.find(key);
  return it == models_.end() ? nullptr : it->second;
}

ModelPtr PresentedRing::store_model(const std::string& key,
                                    ModelPtr model) const {
  std::lock_guard lock(mutex_);
  return models_.emplace(key, std::move(model)).first->second;
}

PresentedModule::PresentedModule(RingPtr ring, std::size_t rank,
                                 std::vector<FreeVector> columns)
    : ring_(std::move(ring)), rank_(rank), columns_(std::move(columns)) {
  if (rank_ == 0) throw PreconditionError("module of rank 0");
  key_ = "rank" + std::to_string(rank_) + "|";
  for (const auto& c : columns_) {
    if (c.rank() != rank_) throw MismatchError("presentation column rank");
    if (!same_ring(ring_->ambient(), c.ring()))
      throw MismatchError("presentation column over a different ring");
    key_ += c.to_string();
    key_ += ';';
  }
}

PresentedModule PresentedModule::free(const RingPtr& ring, std::size_t rank) {
  return PresentedModule(ring, rank, {});
}

PresentedModule PresentedModule::from_presentation(
    const RingPtr& ring, std::size_t rank, std::vector<FreeVector> columns) {
  std::erase_if(columns, [](const FreeVector& v) { return v.is_zero(); });
  return PresentedModule(ring, rank, std::move(columns));
}

PresentedModule PresentedModule::from_ideal(const RingPtr& ring,
                                            std::vector<Polynomial> gens) {
  if (gens.empty()) throw PreconditionError("ideal module without generators");
  auto cols = syzygies(ring->ambient(), gens, ring->relations());
  return from_presentation(ring, gens.size(), std::move(cols));
}

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)),
      gens_(std::move(gens)),
      cache_(std::make_shared<PowerCache>()) {
  for (const auto& g : gens_) {
    if (!same_ring(ring_->ambient(), g.ring()))
      throw MismatchError("ideal generator over a different ring");
    require_local_element(g, "ideal generator");
  }
  key_ = join_key(gens_);
}

std::vector<Polynomial> IdealHandle::power_generators(unsigned k) const {
  if (k == 0) throw PreconditionError("power_generators needs k >= 1");
  std::lock_guard lock(cache_->mutex);
  auto& powers = cache_->powers;
  if (powers.empty()) powers.push_back(minimalize(*ring_, gens_));
  while (powers.size() < k)
    powers.push_back(minimalize(*ring_, products(powers.back(), powers.front())));
  return powers[k - 1];
}

IdealHandle maximal_ideal(const RingPtr& ring) {
  return IdealHandle(ring, ring->variables());
}

GroebnerBasis truncated_basis(const RingPtr& ring,
                              const std::vector<Polynomial>& extra,
                              unsigned degree) {
  std::vector<Polynomial> gens = ring->relations();
  gens.insert(gens.end(), extra.begin(), extra.end());
  const auto mons = monomial_generators(ring->ambient(), degree);
  gens.insert(gens.end(), mons.begin(), mons.end());
  return buchberger(ring->ambient(), gens);
}

unsigned primary_exponent(const RingPtr& ring, const IdealHandle& ideal,
                          unsigned bound) {
  const std::string key = "primary|" + ideal.key();
  if (auto cached = ring->cached_exponent(key)) return *cached;
  // m^s lies in I (locally) iff it lies in I + m^{s+1}, by Nakayama; the
  // latter is m-primary, so polynomial membership decides it exactly.
  for (unsigned s = 1; s <= bound; ++s) {
    const GroebnerBasis gb = truncated_basis(ring, ideal.generators(), s + 1);
    const auto mons = monomial_generators(ring->ambient(), s);
    if (reduces_to_zero(gb, mons)) {
      ring->store_exponent(key, s);
      return s;
    }
  }
  throw NotPrimaryError("not m-primary up to bound " + std::to_string(bound) +
                        ": (" + ideal.key() + ")");
}

unsigned module_exponent(const PresentedModule& module,
                         const std::vector<FreeVector>& gens,
                         unsigned bound) {
  const auto& ring = module.ring();
  const auto& amb = ring->ambient();
  for (unsigned c = 0; c <= bound; ++c) {
    const AlgebraPtr alg = build_algebra(truncated_basis(ring, {}, c + 1));
    const ArtinianModule model =
        module_model(alg, module.rank(), module.columns(), gens);
    bool inside = true;
    for (const auto& m : monomials_of_degree(amb->num_variables(), c)) {
      const Polynomial mono = Polynomial::term(amb, m, Scalar::one(amb->field()));
      for (std::size_t j = 0; j < module.rank() && inside; ++j)
        inside = is_zero(
            model.coordinates(mono * FreeVector::unit(amb, module.rank(), j)));
      if (!inside) break;
    }
    if (inside) return c;
  }
  throw NotPrimaryError("submodule does not contain m^c M for c <= " +
                        std::to_string(bound));
}

IdealHandle ideal_power(const IdealHandle& ideal, unsigned k) {
  return IdealHandle(ideal.ring(), ideal.power_generators(k));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
  return IdealHandle(a.ring(),
                     minimalize(*a.ring(), products(a.generators(),
                                                    b.generators())));
}

bool ideal_contains(const IdealHandle& ideal, const IdealHandle& sub,
                    const EngineOptions& opts) {
  const auto& ring = ideal.ring();
  const unsigned s = primary_exponent(ring, ideal, opts.primary_bound);
  std::vector<Polynomial> gens = ring->relations();
  gens.insert(gens.end(), ideal.generators().begin(), ideal.generators().end());
  const auto powers = pure_powers(ring->ambient(), s);
  gens.insert(gens.end(), powers.begin(), powers.end());
  return reduces_to_zero(buchberger(ring->ambient(), gens), sub.generators());
}

ReductionResult is_reduction(const IdealHandle& j, const IdealHandle& i,
                             const EngineOptions& opts) {
  const auto& ring = i.ring();
  if (!ideal_contains(i, j, opts))
    throw PreconditionError("reduction test needs J inside I");
  const unsigned s = primary_exponent(ring, i, opts.primary_bound);
  const auto vars = ring->variables();
  for (unsigned r = 0; r <= opts.reduction_bound; ++r) {
    // I^{r+1} = J I^r  iff  I^{r+1} lies in J I^r + m I^{r+1} (Nakayama);
    // m^{s(r+1)+1} lies in the right-hand side, so truncating there is exact.
    const auto next = i.power_generators(r + 1);
    std::vector<Polynomial> gens = ring->relations();
    const auto jir = r == 0 ? j.generators()
                            : products(j.generators(), i.power_generators(r));
    gens.insert(gens.end(), jir.begin(), jir.end());
    const auto mnext = products(vars, next);
    gens.insert(gens.end(), mnext.begin(), mnext.end());
    const auto powers = pure_powers(ring->ambient(), s * (r + 1) + 1);
    gens.insert(gens.end(), powers.begin(), powers.end());
    if (reduces_to_zero(buchberger(ring->ambient(), gens), next))
      return {true, r};
  }
  return {false, std::nullopt};
}

AlgebraPtr quotient_algebra(const IdealHandle& ideal, unsigned n,
                            const EngineOptions& opts) {
  const auto& ring = ideal.ring();
  const unsigned s = primary_exponent(ring, ideal, opts.primary_bound);
  const unsigned trunc = s * (n + 1) + opts.truncation_extra;
  const std::string key =
      ideal.key() + "|n=" + std::to_string(n) + "|N=" + std::to_string(trunc);
  if (auto alg = ring->cached_algebra(key)) return alg;
  std::vector<Polynomial> gens = ring->relations();
  const auto power = ideal.power_generators(n + 1);
  gens.insert(gens.end(), power.begin(), power.end());
  const auto powers = pure_powers(ring->ambient(), trunc);
  gens.insert(gens.end(), powers.begin(), powers.end());
  return ring->store_algebra(key, build_algebra(buchberger(ring->ambient(), gens)));
}

QuotientModel artinian_quotient(const PresentedModule& module,
                                const IdealHandle& ideal, unsigned n,
                                const EngineOptions& opts) {
  const auto& ring = ideal.ring();
  if (ring != module.ring() && !same_ring(ring->ambient(), module.ring()->ambient()))
    throw MismatchError("module and ideal live over different rings");
  const unsigned s = primary_exponent(ring, ideal, opts.primary_bound);
  QuotientModel out;
  out.truncation = s * (n + 1) + opts.truncation_extra;
  out.host = quotient_algebra(ideal, n, opts);
  const std::string key = module.key() + "#" + ideal.key() +
                          "|n=" + std::to_string(n) +
                          "|N=" + std::to_string(out.truncation);
  out.module = ring->cached_model(key);
  if (!out.module) {
    ModelPtr built =
        module.is_free() && module.rank() == 1
            ? std::make_shared<const ArtinianModule>(
                  ArtinianModule::regular(out.host))
            : std::make_shared<const ArtinianModule>(
                  module_model(out.host, module.rank(), module.columns()));
    out.module = ring->store_model(key, std::move(built));
  }
  if (out.module->dim() == 0)
    throw PreconditionError("the module is zero (M / I M has length 0)");
  return out;
}

}  // namespace irr
