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
#include "irr/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "irr/error.hpp"

namespace irr {

namespace {

void require_same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  if (!same_ring(a, b))
    throw MismatchError("polynomials belong to different ambient rings");
}

// Merges two decreasing term lists into a + sign*b.
std::vector<Term> merge_terms(const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract,
                              const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = ord.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coefficient = -out.back().coefficient;
    } else {
      Scalar s = subtract ? a[i].coefficient - b[j].coefficient
                          : a[i].coefficient + b[j].coefficient;
      if (!s.is_zero()) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coefficient = -out.back().coefficient;
  }
  return out;
}

}  // namespace

PolyRing::PolyRing(Field field, std::vector<std::string> variables,
                   MonomialOrder order)
    : field_(field), variables_(std::move(variables)), order_(order) {
  if (variables_.size() > kMaxVariables)
    throw PreconditionError("at most " + std::to_string(kMaxVariables) +
                            " variables are supported");
  for (std::size_t i = 0; i < variables_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (variables_[i] == variables_[j])
        throw PreconditionError("duplicate variable name " + variables_[i]);
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

bool same_ring(const PolyRingPtr& a, const PolyRingPtr& b) {
  return a == b || (a && b && *a == *b);
}

Polynomial::Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw PreconditionError("polynomial without a ring");
}

Polynomial Polynomial::constant(PolyRingPtr ring, const Scalar& c) {
  return term(ring, ring->one(), c);
}

Polynomial Polynomial::constant(PolyRingPtr ring, long long c) {
  const Field f = ring->field();
  return constant(std::move(ring), Scalar::from_int(f, c));
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  const auto n = ring->num_variables();
  const Field f = ring->field();
  return term(std::move(ring), Monomial::variable(n, index), Scalar::one(f));
}

Polynomial Polynomial::term(PolyRingPtr ring, const Monomial& m,
                            const Scalar& c) {
  if (m.num_variables() != ring->num_variables())
    throw MismatchError("monomial arity differs from the ring");
  if (!(c.field() == ring->field()))
    throw MismatchError("coefficient field differs from the ring");
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& ord = p.ring_->order();
  for (const auto& t : terms) {
    if (t.monomial.num_variables() != p.ring_->num_variables())
      throw MismatchError("monomial arity differs from the ring");
    if (!(t.coefficient.field() == p.ring_->field()))
      throw MismatchError("coefficient field differs from the ring");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.monomial, b.monomial) > 0;
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Scalar Polynomial::constant_coefficient() const {
  if (!terms_.empty() && terms_.back().monomial.is_one())
    return terms_.back().coefficient;
  return Scalar::zero(ring_->field());
}

unsigned Polynomial::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty())
    throw PreconditionError("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  terms_ = merge_terms(terms_, o.terms_, false, ring_->order());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(ring_, o.ring_);
  terms_ = merge_terms(terms_, o.terms_, true, ring_->order());
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      const Monomial m = s.monomial * t.monomial;
      auto [it, inserted] = acc.try_emplace(m, s.coefficient * t.coefficient);
      if (!inserted) it->second += s.coefficient * t.coefficient;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
  return Polynomial::from_terms(a.ring_, std::move(terms));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, t.coefficient * c});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of terms.
  for (const auto& t : terms_)
    r.terms_.push_back({t.monomial * m, t.coefficient * c});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = ring_->variables();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string coef = t.coefficient.to_string();
    bool negative = !coef.empty() && coef[0] == '-';
    if (negative) coef.erase(0, 1);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += coef;
    } else {
      if (coef != "1") out += coef + "*";
      out += t.monomial.to_string(names);
    }
  }
  return out;
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd:
      return p + q;
    case ArithOp::kSub:
      return p - q;
    case ArithOp::kMul:
      return p * q;
  }
  throw PreconditionError("unknown arithmetic operation");
}

std::pair<Monomial, Scalar> leading_term(const Polynomial& p,
                                         const MonomialOrder& ord) {
  if (p.is_zero())
    throw PreconditionError("leading term of the zero polynomial");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (ord.compare(t.monomial, best->monomial) > 0) best = &t;
  return {best->monomial, best->coefficient};
}

FreeVector::FreeVector(PolyRingPtr ring, std::size_t rank)
    : ring_(std::move(ring)), components_(rank, Polynomial(ring_)) {}

FreeVector::FreeVector(std::vector<Polynomial> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw PreconditionError("free vector needs at least one component");
  ring_ = components_.front().ring();
  for (const auto& c : components_) require_same_ring(ring_, c.ring());
}

FreeVector FreeVector::unit(PolyRingPtr ring, std::size_t rank,
                            std::size_t i) {
  FreeVector v(ring, rank);
  v.components_.at(i) = Polynomial::constant(ring, 1);
  return v;
}

bool FreeVector::is_zero() const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

FreeVector& FreeVector::operator+=(const FreeVector& o) {
  if (rank() != o.rank()) throw MismatchError("free vector rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) components_[i] += o.components_[i];
  return *this;
}

FreeVector& FreeVector::operator-=(const FreeVector& o) {
  if (rank() != o.rank()) throw MismatchError("free vector rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) components_[i] -= o.components_[i];
  return *this;
}

FreeVector operator*(const Polynomial& f, const FreeVector& v) {
  FreeVector r = v;
  for (auto& c : r.components_) c = f * c;
  return r;
}

bool operator==(const FreeVector& a, const FreeVector& b) {
  return a.components_ == b.components_;
}

std::string FreeVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ", ";
    out += components_[i].to_string();
  }
  return out + ")";
}

}  // namespace irr
