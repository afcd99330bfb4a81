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
#ifndef IRR_POLYNOMIAL_HPP
#define IRR_POLYNOMIAL_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irr/monomial.hpp"
#include "irr/scalar.hpp"

namespace irr {

/// Ambient polynomial ring k[x_1..x_n] with a fixed term order.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::degrevlex());

  static std::shared_ptr<const PolyRing> make(
      Field field, std::vector<std::string> variables,
      MonomialOrder order = MonomialOrder::degrevlex()) {
    return std::make_shared<const PolyRing>(field, std::move(variables),
                                            order);
  }

  Field field() const noexcept { return field_; }
  const std::vector<std::string>& variables() const noexcept {
    return variables_;
  }
  std::size_t num_variables() const noexcept { return variables_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Monomial one() const { return Monomial(variables_.size()); }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.order_ == b.order_ &&
           a.variables_ == b.variables_;
  }

 private:
  Field field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// True when both pointers denote the same ring (identity or structure).
bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b);

struct Term {
  Monomial monomial;
  Scalar coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial. Terms are stored strictly decreasing under the ring's
/// order and never carry a zero coefficient.
class Polynomial {
 public:
  explicit Polynomial(PolyRingPtr ring);

  static Polynomial constant(PolyRingPtr ring, const Scalar& c);
  static Polynomial constant(PolyRingPtr ring, long long c);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);
  static Polynomial term(PolyRingPtr ring, const Monomial& m, const Scalar& c);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Scalar constant_coefficient() const;
  unsigned total_degree() const noexcept;

  /// Throws PreconditionError on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coefficient() const {
    return leading_term().coefficient;
  }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned k) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { kAdd, kSub, kMul };

/// Throws MismatchError when the operands live in different rings.
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op);

/// Order-maximal term under an explicitly supplied order.
std::pair<Monomial, Scalar> leading_term(const Polynomial& p,
                                         const MonomialOrder& ord);

/// Element of the free module (ambient ring)^rank.
class FreeVector {
 public:
  FreeVector(PolyRingPtr ring, std::size_t rank);
  explicit FreeVector(std::vector<Polynomial> components);

  static FreeVector unit(PolyRingPtr ring, std::size_t rank, std::size_t i);

  const PolyRingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return components_.size(); }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Polynomial>& components() const noexcept {
    return components_;
  }
  bool is_zero() const noexcept;

  FreeVector& operator+=(const FreeVector& o);
  FreeVector& operator-=(const FreeVector& o);
  friend FreeVector operator+(FreeVector a, const FreeVector& b) {
    return a += b;
  }
  friend FreeVector operator-(FreeVector a, const FreeVector& b) {
    return a -= b;
  }
  friend FreeVector operator*(const Polynomial& f, const FreeVector& v);

  friend bool operator==(const FreeVector& a, const FreeVector& b);

  std::string to_string() const;

 private:
  PolyRingPtr ring_;
  std::vector<Polynomial> components_;
};

}  // namespace irr

#endif  // IRR_POLYNOMIAL_HPP
