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

#ifndef IRR_SCALAR_HPP
#define IRR_SCALAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace irr {

/// Coefficient field: either the rationals or a prime field F_p with p a
/// machine-word prime below 2^31.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  /// Accepts "Q" (or "q", "QQ") and "Fp:<p>".
  static Field parse(std::string_view text);

  constexpr bool is_rational() const noexcept { return p_ == 0; }
  constexpr std::uint32_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : q_(std::in_place, 0) {}

  static Scalar zero(Field f) { return from_int(f, 0); }
  static Scalar one(Field f) { return from_int(f, 1); }
  static Scalar from_int(Field f, long long v);
  static Scalar from_mpz(Field f, const mpz_class& v);
  static Scalar from_rational(Field f, const mpq_class& v);
  /// Parses "a" or "a/b" with optional sign.
  static Scalar parse(Field f, std::string_view text);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Rational value; only valid over Q.
  const mpq_class& rational() const;
  /// Residue in [0, p); only valid over F_p.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const;

  Field field_;
  std::uint32_t residue_ = 0;
  std::optional<mpq_class> q_;
};

}  // namespace irr

#endif  // IRR_SCALAR_HPP
