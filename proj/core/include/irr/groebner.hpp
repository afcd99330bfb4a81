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
#ifndef IRR_GROEBNER_HPP
#define IRR_GROEBNER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "irr/polynomial.hpp"

namespace irr {

struct VectorTerm {
  Monomial monomial;
  std::uint32_t component = 0;
  Scalar coefficient;
};

/// Element of a free module as a list of terms, strictly decreasing in the
/// position-over-term order. Rank-1 vectors are ordinary polynomials.
using SparseVector = std::vector<VectorTerm>;

/// Gröbner basis of an ideal (rank 1) or of a submodule of a free module.
class GroebnerBasis {
 public:
  GroebnerBasis(PolyRingPtr ring, std::size_t rank,
                std::vector<SparseVector> elements, bool reduced);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  bool reduced() const noexcept { return reduced_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<SparseVector>& elements() const noexcept {
    return elements_;
  }

  /// Requires rank 1.
  std::vector<Polynomial> polynomials() const;
  std::vector<FreeVector> vectors() const;
  std::vector<ModuleMonomial> leading_monomials() const;

  /// True when the basis generates the whole ring / free module component.
  bool is_unit() const;

  Polynomial normal_form(const Polynomial& p) const;
  FreeVector normal_form(const FreeVector& v) const;
  SparseVector normal_form(SparseVector v) const;
  bool contains(const Polynomial& p) const {
    return normal_form(p).is_zero();
  }
  bool contains(const FreeVector& v) const {
    return normal_form(v).is_zero();
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  PolyRingPtr ring_;
  std::size_t rank_;
  std::vector<SparseVector> elements_;
  bool reduced_;
};

/// Reduced Gröbner basis of the ideal generated by \p gens under the ring's
/// order. Requires a nonempty generator list.
GroebnerBasis buchberger(std::span<const Polynomial> gens);
/// Same, but an empty list yields the zero ideal.
GroebnerBasis buchberger(const PolyRingPtr& ring,
                         std::span<const Polynomial> gens);

/// Reduced Gröbner basis of the submodule of ring^rank spanned by
/// \p vectors, position-over-term with component 0 on top.
GroebnerBasis module_groebner(const PolyRingPtr& ring, std::size_t rank,
                              std::span<const FreeVector> vectors);

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);
FreeVector normal_form(const FreeVector& v, const GroebnerBasis& gb);

/// Monomials (with components) outside the leading-term module, sorted
/// increasingly. Closed under division within each component.
class StandardBasis {
 public:
  StandardBasis(std::size_t num_variables, std::size_t rank,
                std::vector<ModuleMonomial> monomials);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<ModuleMonomial>& monomials() const noexcept {
    return monomials_;
  }
  const ModuleMonomial& operator[](std::size_t i) const {
    return monomials_[i];
  }
  std::optional<std::size_t> index_of(const ModuleMonomial& m) const;

 private:
  struct KeyHash {
    std::size_t operator()(const ModuleMonomial& m) const noexcept {
      return m.monomial.hash() * 31 + m.component;
    }
  };

  std::size_t num_variables_;
  std::size_t rank_;
  std::vector<ModuleMonomial> monomials_;
  std::unordered_map<ModuleMonomial, std::size_t, KeyHash> index_;
};

/// Throws NotZeroDimensionalError when some component of the quotient is
/// infinite-dimensional.
StandardBasis standard_monomials(const GroebnerBasis& gb);

/// Generators of {c in ring^s : sum c_i gens_i lies in (relations)}.
std::vector<FreeVector> syzygies(const PolyRingPtr& ring,
                                 std::span<const Polynomial> gens,
                                 std::span<const Polynomial> relations);

/// Generators of the intersection of two ideals, by eliminating an
/// auxiliary variable.
std::vector<Polynomial> intersect_ideals(const PolyRingPtr& ring,
                                         std::span<const Polynomial> a,
                                         std::span<const Polynomial> b);

SparseVector to_sparse(const Polynomial& p);
SparseVector to_sparse(const FreeVector& v);
Polynomial to_polynomial(const PolyRingPtr& ring, const SparseVector& v);
FreeVector to_free_vector(const PolyRingPtr& ring, std::size_t rank,
                          const SparseVector& v);

}  // namespace irr

#endif  // IRR_GROEBNER_HPP
