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
#ifndef IRR_MONOMIAL_HPP
#define IRR_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace irr {

inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in \p num_variables variables.
  explicit Monomial(std::size_t num_variables);
  Monomial(std::initializer_list<unsigned> exponents);

  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t num_variables, std::size_t index,
                           unsigned power = 1);

  std::size_t num_variables() const noexcept { return nvars_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept;

  /// "1", "x", "x^2*y", using the given variable names.
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { kDegRevLex, kLex, kElimination };

/// Term order on monomials. The elimination order compares the first
/// \c block variables by degrevlex and breaks ties by degrevlex on the rest.
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;

  static constexpr MonomialOrder degrevlex() { return {}; }
  static constexpr MonomialOrder lex() {
    return MonomialOrder(OrderKind::kLex, 0);
  }
  static constexpr MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(OrderKind::kElimination, block);
  }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }

  /// Throws MismatchError when the variable counts differ.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  std::string to_string() const;

  friend constexpr bool operator==(const MonomialOrder&,
                                   const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(OrderKind kind, std::size_t block)
      : kind_(kind), block_(block) {}

  OrderKind kind_ = OrderKind::kDegRevLex;
  std::size_t block_ = 0;
};

inline std::strong_ordering compare_monomials(const Monomial& a,
                                              const Monomial& b,
                                              const MonomialOrder& ord) {
  return ord.compare(a, b);
}

/// Term of a free module: a monomial placed in a component.
struct ModuleMonomial {
  Monomial monomial;
  std::uint32_t component = 0;

  friend bool operator==(const ModuleMonomial&,
                         const ModuleMonomial&) = default;
};

/// Position-over-term wrapping of \p ord: a lower component index is
/// larger, then monomials compare under \p ord.
std::strong_ordering compare_pot(const ModuleMonomial& a,
                                 const ModuleMonomial& b,
                                 const MonomialOrder& ord);

}  // namespace irr

#endif  // IRR_MONOMIAL_HPP
