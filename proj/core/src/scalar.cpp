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
#include "irr/scalar.hpp"

#include <charconv>

#include "irr/error.hpp"

namespace irr {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw PreconditionError("field characteristic " + std::to_string(p) +
                            " is not a prime below 2^31");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q" || text == "QQ") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    std::uint32_t p = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() &&
        !digits.empty())
      return prime(p);
  }
  throw PreconditionError("unknown field \"" + std::string(text) +
                          "\" (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar Scalar::from_int(Field f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_.emplace(static_cast<long>(v));
  } else {
    s.q_.reset();
    const long long p = f.characteristic();
    long long r = v % p;
    if (r < 0) r += p;
    s.residue_ = static_cast<std::uint32_t>(r);
  }
  return s;
}

Scalar Scalar::from_mpz(Field f, const mpz_class& v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_.emplace(v);
  } else {
    s.q_.reset();
    s.residue_ = reduce_mpz(v, f.characteristic());
  }
  return s;
}

Scalar Scalar::from_rational(Field f, const mpq_class& v) {
  if (f.is_rational()) {
    Scalar s;
    s.q_.emplace(v);
    s.q_->canonicalize();
    return s;
  }
  const auto den = reduce_mpz(v.get_den(), f.characteristic());
  if (den == 0)
    throw PreconditionError("denominator of " + v.get_str() +
                            " vanishes in " + f.to_string());
  return from_mpz(f, v.get_num()) / from_int(f, den);
}

Scalar Scalar::parse(Field f, std::string_view text) {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0)
    throw PreconditionError("malformed scalar \"" + std::string(text) + "\"");
  if (q.get_den() == 0)
    throw PreconditionError("zero denominator in \"" + std::string(text) +
                            "\"");
  q.canonicalize();
  return from_rational(f, q);
}

bool Scalar::is_zero() const noexcept {
  return field_.is_rational() ? sgn(*q_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.is_rational() ? *q_ == 1 : residue_ == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational())
    throw MismatchError("rational() called on an F_p scalar");
  return *q_;
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational())
    throw MismatchError("residue() called on a rational scalar");
  return residue_;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw MismatchError("scalar arithmetic across fields " +
                        field_.to_string() + " and " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    *r.q_ = -*q_;
  } else if (residue_ != 0) {
    r.residue_ = field_.characteristic() - residue_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  Scalar r = *this;
  if (field_.is_rational()) {
    *r.q_ = 1 / *q_;
    r.q_->canonicalize();
  } else {
    r.residue_ = inverse_mod(residue_, field_.characteristic());
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    *q_ += *o.q_;
  } else {
    const std::uint64_t s = std::uint64_t{residue_} + o.residue_;
    residue_ = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    *q_ -= *o.q_;
  } else {
    const std::uint32_t p = field_.characteristic();
    residue_ = residue_ >= o.residue_ ? residue_ - o.residue_
                                      : residue_ + (p - o.residue_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    *q_ *= *o.q_;
  } else {
    const std::uint64_t m = std::uint64_t{residue_} * o.residue_;
    residue_ = static_cast<std::uint32_t>(m % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? *a.q_ == *b.q_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_->get_str() : std::to_string(residue_);
}

}  // namespace irr
