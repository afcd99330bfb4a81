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
#ifndef IRR_LOCAL_RING_HPP
#define IRR_LOCAL_RING_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irr/artinian.hpp"
#include "irr/groebner.hpp"

namespace irr {

struct EngineOptions {
  /// Largest s tried when searching for m^s inside an ideal.
  unsigned primary_bound = 50;
  /// Added to the certified truncation exponent of every Artinian model.
  unsigned truncation_extra = 0;
  /// Largest reduction number tried by is_reduction.
  unsigned reduction_bound = 10;
  /// Worker threads for independent table rows; 1 runs inline.
  unsigned threads = 1;
};

using ModelPtr = std::shared_ptr<const ArtinianModule>;

/// Local ring k[[x]]/a presented by polynomial relations. Every relation lies
/// in the ideal of the variables, so the maximal ideal is generated by the
/// variable images.
///
/// Gröbner bases, exponents and Artinian models derived from the ring are
/// memoized here. The caches are guarded by a mutex; concurrent callers
/// computing the same key may both do the work, and the first insertion
/// wins (the values are identical).
class PresentedRing {
 public:
  static std::shared_ptr<const PresentedRing> create(
      PolyRingPtr ambient, std::vector<Polynomial> relations);

  const PolyRingPtr& ambient() const noexcept { return ambient_; }
  Field field() const noexcept { return ambient_->field(); }
  std::size_t num_variables() const noexcept {
    return ambient_->num_variables();
  }
  const std::vector<Polynomial>& relations() const noexcept {
    return relations_;
  }
  const GroebnerBasis& relation_basis() const noexcept { return basis_; }

  /// Polynomial normal form modulo the relations.
  Polynomial reduce(const Polynomial& p) const {
    return basis_.normal_form(p);
  }
  std::vector<Polynomial> variables() const;

  std::optional<unsigned> cached_exponent(const std::string& key) const;
  void store_exponent(const std::string& key, unsigned value) const;
  AlgebraPtr cached_algebra(const std::string& key) const;
  AlgebraPtr store_algebra(const std::string& key, AlgebraPtr alg) const;
  ModelPtr cached_model(const std::string& key) const;
  ModelPtr store_model(const std::string& key, ModelPtr model) const;

  PresentedRing(PolyRingPtr ambient, std::vector<Polynomial> relations,
                GroebnerBasis basis);

 private:
  PolyRingPtr ambient_;
  std::vector<Polynomial> relations_;
  GroebnerBasis basis_;

  mutable std::mutex mutex_;
  mutable std::map<std::string, unsigned> exponents_;
  mutable std::map<std::string, AlgebraPtr> algebras_;
  mutable std::map<std::string, ModelPtr> models_;
};

using RingPtr = std::shared_ptr<const PresentedRing>;

/// Finitely presented module coker(ring^c -> ring^rank).
class PresentedModule {
 public:
  static PresentedModule free(const RingPtr& ring, std::size_t rank);
  static PresentedModule from_presentation(const RingPtr& ring,
                                           std::size_t rank,
                                           std::vector<FreeVector> columns);
  /// The ideal (gens) as a module, presented by its syzygies modulo the
  /// ring relations.
  static PresentedModule from_ideal(const RingPtr& ring,
                                    std::vector<Polynomial> gens);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<FreeVector>& columns() const noexcept { return columns_; }
  bool is_free() const noexcept { return columns_.empty(); }
  /// Stable textual identity used as a cache key.
  const std::string& key() const noexcept { return key_; }

 private:
  PresentedModule(RingPtr ring, std::size_t rank,
                  std::vector<FreeVector> columns);

  RingPtr ring_;
  std::size_t rank_;
  std::vector<FreeVector> columns_;
  std::string key_;
};

/// Proper ideal of a PresentedRing with lazily cached powers.
class IdealHandle {
 public:
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  const std::string& key() const noexcept { return key_; }

  /// Generators of I^k (k >= 1), products deduplicated modulo the relations
  /// and with redundant generators removed.
  std::vector<Polynomial> power_generators(unsigned k) const;

 private:
  struct PowerCache {
    std::mutex mutex;
    std::vector<std::vector<Polynomial>> powers;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::string key_;
  std::shared_ptr<PowerCache> cache_;
};

IdealHandle maximal_ideal(const RingPtr& ring);

/// Least s with m^s inside I (in the local ring). Throws NotPrimaryError when
/// no s <= bound works.
unsigned primary_exponent(const RingPtr& ring, const IdealHandle& ideal,
                          unsigned bound = 50);

/// Least c with m^c M inside the submodule generated by \p gens. Throws
/// NotPrimaryError past the bound.
unsigned module_exponent(const PresentedModule& module,
                         const std::vector<FreeVector>& gens,
                         unsigned bound = 50);

IdealHandle ideal_power(const IdealHandle& ideal, unsigned k);

/// Product ideal generated by pairwise products.
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);

/// Membership of every generator of \p sub in \p ideal, decided exactly in
/// the local ring (the ideal must be m-primary).
bool ideal_contains(const IdealHandle& ideal, const IdealHandle& sub,
                    const EngineOptions& opts = {});

struct ReductionResult {
  bool is_reduction = false;
  std::optional<unsigned> reduction_number;
};

/// Decides whether J is a reduction of I and returns the least r with
/// J I^r = I^{r+1}. Throws PreconditionError when J is not inside I.
ReductionResult is_reduction(const IdealHandle& j, const IdealHandle& i,
                             const EngineOptions& opts = {});

/// GB of relations + extra + (all monomials of the given degree).
GroebnerBasis truncated_basis(const RingPtr& ring,
                              const std::vector<Polynomial>& extra,
                              unsigned degree);

/// Exact finite model of M / I^{n+1} M together with its host R / I^{n+1}.
struct QuotientModel {
  AlgebraPtr host;
  ModelPtr module;
  /// Exponent N of the pure powers x_i^N added to make the polynomial
  /// quotient finite; m^N lies in I^{n+1} so the model is exact.
  unsigned truncation = 0;
};

/// x_1^power, ..., x_n^power in the ambient ring.
std::vector<Polynomial> pure_powers(const PolyRingPtr& ring, unsigned power);

/// R / (x_1^c, ..., x_n^c) as a finite algebra, cached on the ring.
AlgebraPtr power_truncation(const RingPtr& ring, unsigned c);

/// Local membership of \p vectors in the submodule of M generated by \p sub.
/// Exact whenever the polynomial test succeeds or the submodule contains
/// m^c M for some c; throws NotPrimaryError otherwise.
bool module_contains(const PresentedModule& module,
                     const std::vector<FreeVector>& sub,
                     const std::vector<FreeVector>& vectors,
                     const EngineOptions& opts = {});

QuotientModel artinian_quotient(const PresentedModule& module,
                                const IdealHandle& ideal, unsigned n,
                                const EngineOptions& opts = {});

/// Host algebra alone: R / I^{n+1}.
AlgebraPtr quotient_algebra(const IdealHandle& ideal, unsigned n,
                            const EngineOptions& opts = {});

}  // namespace irr

#endif  // IRR_LOCAL_RING_HPP
