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
#ifndef IRR_TESTS_SUPPORT_HPP
#define IRR_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "irr/harness/parser.hpp"
#include "irr/local_ring.hpp"
#include "irr/polynomial.hpp"

namespace irr_test {

using namespace irr;

inline const Field kQ = Field::rationals();
inline const Field kF2 = Field::prime(2);
inline const Field kF3 = Field::prime(3);
inline const Field kF32003 = Field::prime(32003);

inline PolyRingPtr poly_ring(Field f, std::vector<std::string> vars,
                             MonomialOrder ord = MonomialOrder::degrevlex()) {
  return PolyRing::make(f, std::move(vars), ord);
}

inline Polynomial poly(const PolyRingPtr& r, const std::string& src) {
  return harness::parse_polynomial(src, r);
}

inline std::vector<Polynomial> polys(const PolyRingPtr& r,
                                     const std::vector<std::string>& srcs) {
  std::vector<Polynomial> out;
  for (const auto& s : srcs) out.push_back(poly(r, s));
  return out;
}

inline RingPtr presented(Field f, std::vector<std::string> vars,
                         const std::vector<std::string>& relations) {
  auto r = poly_ring(f, std::move(vars));
  return PresentedRing::create(r, polys(r, relations));
}

inline IdealHandle ideal(const RingPtr& ring,
                         const std::vector<std::string>& gens) {
  return IdealHandle(ring, polys(ring->ambient(), gens));
}

inline FreeVector vec(const PolyRingPtr& r,
                      const std::vector<std::string>& comps) {
  return FreeVector(polys(r, comps));
}

// k[[t^2, t^3]] as k[x1, x2] / (x1^3 - x2^2).
inline RingPtr cusp(Field f = kF32003) {
  return presented(f, {"x1", "x2"}, {"x1^3 - x2^2"});
}

// k[[t^3, t^4, t^5]]: the 2x2 minors of [[x1, x2, x3], [x2, x3, x1^2]].
inline RingPtr curve345(Field f = kF32003) {
  return presented(f, {"x1", "x2", "x3"},
                   {"x1*x3 - x2^2", "x1^3 - x2*x3", "x1^2*x2 - x3^2"});
}

// Seeded source of small random objects for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return rng_() % n; }
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(rng_() % (hi - lo + 1));
  }

  Monomial monomial(std::size_t nvars, unsigned max_deg) {
    std::vector<unsigned> e(nvars, 0);
    const unsigned deg = static_cast<unsigned>(below(max_deg + 1));
    for (unsigned i = 0; i < deg; ++i) ++e[below(nvars)];
    return Monomial::from_exponents(e);
  }

  Scalar scalar(Field f) {
    if (f.is_rational()) {
      const long long num = between(-9, 9);
      const long long den = between(1, 4);
      return Scalar::from_rational(f, mpq_class(static_cast<long>(num), static_cast<long>(den)));
    }
    return Scalar::from_int(f, between(0, f.characteristic() - 1));
  }

  Polynomial polynomial(const PolyRingPtr& r, unsigned max_deg,
                        unsigned max_terms) {
    std::vector<Term> terms;
    const std::size_t n = below(max_terms + 1);
    for (std::size_t i = 0; i < n; ++i) {
      terms.push_back({monomial(r->num_variables(), max_deg),
                       scalar(r->field())});
    }
    return Polynomial::from_terms(r, std::move(terms));
  }

  // Random element of the maximal ideal (no constant term).
  Polynomial in_maximal(const PolyRingPtr& r, unsigned max_deg,
                        unsigned max_terms) {
    Polynomial p = polynomial(r, max_deg, max_terms);
    return p - Polynomial::constant(r, p.constant_coefficient());
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace irr_test

#endif  // IRR_TESTS_SUPPORT_HPP
