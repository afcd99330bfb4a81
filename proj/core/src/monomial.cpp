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
#include "irr/monomial.hpp"

#include <algorithm>
#include <limits>

#include "irr/error.hpp"

namespace irr {

namespace {

std::uint16_t checked_exponent(unsigned long v) {
  if (v > std::numeric_limits<std::uint16_t>::max())
    throw PreconditionError("monomial exponent overflow (" +
                            std::to_string(v) + ")");
  return static_cast<std::uint16_t>(v);
}

void require_same_arity(const Monomial& a, const Monomial& b) {
  if (a.num_variables() != b.num_variables())
    throw MismatchError("monomials over " +
                        std::to_string(a.num_variables()) + " and " +
                        std::to_string(b.num_variables()) + " variables");
}

// Degrevlex restricted to variables [begin, end).
std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b,
                                     std::size_t begin, std::size_t end) {
  unsigned da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::size_t num_variables) {
  if (num_variables > kMaxVariables)
    throw PreconditionError("at most " + std::to_string(kMaxVariables) +
                            " variables are supported");
  nvars_ = static_cast<std::uint8_t>(num_variables);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) {
    exp_[i++] = checked_exponent(e);
    degree_ += e;
  }
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    m.exp_[i] = checked_exponent(exponents[i]);
    m.degree_ += exponents[i];
  }
  return m;
}

Monomial Monomial::variable(std::size_t num_variables, std::size_t index,
                            unsigned power) {
  Monomial m(num_variables);
  if (index >= num_variables)
    throw PreconditionError("variable index out of range");
  m.exp_[index] = checked_exponent(power);
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i)
    r.exp_[i] = checked_exponent(unsigned{a.exp_[i]} + b.exp_[i]);
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  if (!b.divides(a)) throw PreconditionError("monomial does not divide");
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i)
    r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a, b);
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
  require_same_arity(a, b);
  const std::size_t n = a.num_variables();
  switch (kind_) {
    case OrderKind::kDegRevLex:
      return degrevlex_range(a, b, 0, n);
    case OrderKind::kLex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case OrderKind::kElimination: {
      const std::size_t k = std::min(block_, n);
      const auto first = degrevlex_range(a, b, 0, k);
      if (first != 0) return first;
      return degrevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case OrderKind::kDegRevLex:
      return "degrevlex";
    case OrderKind::kLex:
      return "lex";
    case OrderKind::kElimination:
      return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

std::strong_ordering compare_pot(const ModuleMonomial& a,
                                 const ModuleMonomial& b,
                                 const MonomialOrder& ord) {
  if (a.component != b.component) return b.component <=> a.component;
  return ord.compare(a.monomial, b.monomial);
}

}  // namespace irr
