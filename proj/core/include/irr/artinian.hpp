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
#ifndef IRR_ARTINIAN_HPP
#define IRR_ARTINIAN_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "irr/groebner.hpp"
#include "irr/linalg.hpp"

namespace irr {

/// Finite-dimensional quotient k[x]/K of the ambient ring by a
/// zero-dimensional ideal, represented on its standard monomials.
///
/// Column j of multiplication(i) holds the coordinates of x_i * b_j.
class ArtinianAlgebra {
 public:
  /// Throws NotZeroDimensionalError when the quotient is infinite.
  explicit ArtinianAlgebra(GroebnerBasis defining);

  const PolyRingPtr& ring() const noexcept { return defining_.ring(); }
  Field field() const noexcept { return ring()->field(); }
  const GroebnerBasis& defining() const noexcept { return defining_; }
  const StandardBasis& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }

  const Matrix& multiplication(std::size_t var) const {
    return multiplications_.at(var);
  }
  const std::vector<Matrix>& multiplications() const noexcept {
    return multiplications_;
  }

  /// Coordinates of 1 (the zero vector when the algebra is zero).
  Vector unit() const;
  /// Images of the ambient variables.
  std::vector<Vector> maximal_ideal_generators() const;

  Vector coordinates(const Polynomial& p) const;
  Polynomial lift(const Vector& v) const;

  /// Matrix of multiplication by the element with coordinates \p v.
  Matrix element_matrix(const Vector& v) const;
  Vector multiply(const Vector& a, const Vector& b) const;

  /// True when every variable acts nilpotently, i.e. the algebra is local
  /// with maximal ideal generated by the variables.
  bool is_local() const;

 private:
  GroebnerBasis defining_;
  StandardBasis basis_;
  std::vector<Matrix> multiplications_;
};

using AlgebraPtr = std::shared_ptr<const ArtinianAlgebra>;

AlgebraPtr build_algebra(const GroebnerBasis& defining);

/// Finite-dimensional module over an ArtinianAlgebra, given as a quotient of
/// a free module by a submodule that contains every host relation in every
/// component.
class ArtinianModule {
 public:
  /// The host algebra as a module over itself.
  static ArtinianModule regular(AlgebraPtr host);

  /// \p module_gb must be a Gröbner basis of a submodule of ring^rank whose
  /// quotient is annihilated by the host's defining ideal.
  ArtinianModule(AlgebraPtr host, GroebnerBasis module_gb);

  const AlgebraPtr& host() const noexcept { return host_; }
  Field field() const noexcept { return host_->field(); }
  std::size_t rank() const noexcept { return basis_.rank(); }
  std::size_t dim() const noexcept { return basis_.size(); }
  const StandardBasis& basis() const noexcept { return basis_; }
  const GroebnerBasis& relations() const noexcept { return gb_; }

  const Matrix& action(std::size_t var) const { return actions_.at(var); }
  const std::vector<Matrix>& actions() const noexcept { return actions_; }

  /// Images of the free generators e_1..e_rank.
  const std::vector<Vector>& generators() const noexcept {
    return generators_;
  }

  Vector coordinates(const FreeVector& v) const;
  FreeVector lift(const Vector& v) const;

  /// Matrix of the action of a host element (given in host coordinates).
  Matrix action_of(const Vector& host_element) const;
  Vector act(const Vector& host_element, const Vector& v) const;

 private:
  ArtinianModule(AlgebraPtr host, GroebnerBasis gb, StandardBasis basis);
  void build_actions();

  AlgebraPtr host_;
  GroebnerBasis gb_;
  StandardBasis basis_;
  std::vector<Matrix> actions_;
  std::vector<Vector> generators_;
  // Action matrix of every host standard monomial, host basis order.
  std::vector<Matrix> monomial_actions_;
};

/// Model of (ring^rank / (columns + extra)) over \p alg: the host relations
/// are added to every component.
ArtinianModule module_model(const AlgebraPtr& alg, std::size_t rank,
                            std::span<const FreeVector> columns,
                            std::span<const FreeVector> extra = {});

std::size_t length(const ArtinianModule& model);

/// Vectors killed by every variable: the socle of the modelled module.
Subspace socle(const ArtinianModule& model);

/// Submodule spanned by host-basis multiples of \p gens.
Subspace submodule_span(const ArtinianModule& model,
                        std::span<const Vector> gens);
/// Ideal of the host generated by \p gens.
Subspace ideal_span(const ArtinianAlgebra& alg, std::span<const Vector> gens);

/// (N :_M <gens>) = {v : g v in N for every g}. N must be a submodule.
Subspace module_colon(const ArtinianModule& model, const Subspace& n,
                      std::span<const Vector> ideal_gens);
/// Colon inside the modelled module itself, i.e. module_colon with N = 0.
Subspace colon_module(const ArtinianModule& model,
                      std::span<const Vector> ideal_gens);

/// {r in host : r w in N for every w in elements}.
Subspace ring_colon(const ArtinianModule& model, const Subspace& n,
                    std::span<const Vector> elements);
/// (N :_R M) computed over the module generators.
Subspace colon_into_ring(const ArtinianModule& model, const Subspace& n);

Subspace annihilator(const ArtinianModule& model);
bool is_faithful(const ArtinianModule& model);

}  // namespace irr

#endif  // IRR_ARTINIAN_HPP
