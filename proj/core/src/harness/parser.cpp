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
#include "irr/harness/parser.hpp"

#include <cctype>

#include "irr/error.hpp"

namespace irr::harness {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const PolyRingPtr& ring)
      : src_(src), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    Polynomial p = sum();
    if (pos_ != src_.size())
      fail(std::string("unexpected '") + src_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      skip_space();
      return true;
    }
    return false;
  }

  bool at_digit() const {
    return pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  std::string integer_text() {
    if (!at_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    std::string text(src_.substr(start, pos_ - start));
    skip_space();
    return text;
  }

  Polynomial sum() {
    Polynomial acc = product();
    for (;;) {
      if (accept('+')) {
        acc = acc + product();
      } else if (accept('-')) {
        acc = acc - product();
      } else {
        return acc;
      }
    }
  }

  Polynomial product() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Scalar d =
            Scalar::from_mpz(ring_->field(), mpz_class(integer_text()));
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc.scaled(d.inverse());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return Polynomial(ring_) - unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    if (pos_ < src_.size() && src_[pos_] == '-') fail("negative exponent");
    const std::size_t at = pos_;
    const mpz_class e(integer_text());
    if (e > 65535) {
      pos_ = at;
      fail("exponent too large");
    }
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Polynomial atom() {
    if (pos_ >= src_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Polynomial inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (at_digit())
      return Polynomial::constant(
          ring_, Scalar::from_mpz(ring_->field(), mpz_class(integer_text())));
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        ++pos_;
      const std::string_view name = src_.substr(start, pos_ - start);
      const auto index = ring_->index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      skip_space();
      return Polynomial::variable(ring_, *index);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  const PolyRingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view src, const PolyRingPtr& ring) {
  return Parser(src, ring).parse();
}

std::string emit(const Polynomial& p) { return p.to_string(); }

std::vector<Polynomial> minors_2x(
    const std::vector<std::vector<std::string>>& rows, const PolyRingPtr& ring) {
  if (rows.size() != 2 || rows[0].size() != rows[1].size() ||
      rows[0].size() < 2)
    throw PreconditionError("minors_2x needs a 2 x l matrix with l >= 2");
  const std::size_t l = rows[0].size();
  std::vector<Polynomial> top, bottom;
  for (std::size_t j = 0; j < l; ++j) {
    top.push_back(parse_polynomial(rows[0][j], ring));
    bottom.push_back(parse_polynomial(rows[1][j], ring));
  }
  std::vector<Polynomial> out;
  std::vector<Polynomial> seen;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      const Polynomial minor = top[i] * bottom[j] - top[j] * bottom[i];
      if (minor.is_zero()) continue;
      const Polynomial key = minor.monic();
      bool duplicate = false;
      for (const auto& s : seen) duplicate = duplicate || s == key;
      if (duplicate) continue;
      seen.push_back(key);
      out.push_back(minor);
    }
  }
  return out;
}

}  // namespace irr::harness
