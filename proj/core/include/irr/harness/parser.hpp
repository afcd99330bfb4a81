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
#ifndef IRR_HARNESS_PARSER_HPP
#define IRR_HARNESS_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "irr/polynomial.hpp"

namespace irr::harness {

/// Grammar, loosest binding first:
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' unary) | ('/' integer))*
///   unary   := '-' unary | power
///   power   := atom ('^' integer)?
///   atom    := integer | identifier | '(' sum ')'
/// Juxtaposition is rejected. Errors are ParseError carrying the offset.
Polynomial parse_polynomial(std::string_view src, const PolyRingPtr& ring);

/// Text that parse_polynomial maps back to \p p.
std::string emit(const Polynomial& p);

/// All 2x2 minors of a 2 x l matrix given by its rows, zero minors dropped,
/// duplicates (up to a scalar) removed. Throws PreconditionError on shape.
std::vector<Polynomial> minors_2x(
    const std::vector<std::vector<std::string>>& rows, const PolyRingPtr& ring);

}  // namespace irr::harness

#endif  // IRR_HARNESS_PARSER_HPP
