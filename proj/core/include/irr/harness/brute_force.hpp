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
#ifndef IRR_HARNESS_BRUTE_FORCE_HPP
#define IRR_HARNESS_BRUTE_FORCE_HPP

#include <cstddef>

#include "irr/artinian.hpp"

namespace irr::harness {

inline constexpr std::size_t kBruteForceMaxDim = 12;
inline constexpr std::uint32_t kBruteForceMaxPrime = 3;

/// Socle dimension found by enumerating all p^dim vectors and counting those
/// killed by every variable. Throws PreconditionError outside p <= 3,
/// dim <= 12, and InvariantViolation if the count is not a power of p.
std::size_t brute_force_socle(const ArtinianModule& model);

}  // namespace irr::harness

#endif  // IRR_HARNESS_BRUTE_FORCE_HPP
