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
#include "irr/harness/brute_force.hpp"

#include <algorithm>
#include <vector>

#include "irr/error.hpp"

namespace irr::harness {

std::size_t brute_force_socle(const ArtinianModule& model) {
  const Field f = model.field();
  const std::size_t dim = model.dim();
  if (f.is_rational() || f.characteristic() > kBruteForceMaxPrime)
    throw PreconditionError("brute force needs F_2 or F_3");
  if (dim > kBruteForceMaxDim)
    throw PreconditionError("brute force needs dim <= " +
                            std::to_string(kBruteForceMaxDim));
  const unsigned p = f.characteristic();
  const auto& actions = model.actions();

  // columns[a][j][i]: entry (i, j) of action a, as a residue.
  std::vector<std::vector<std::vector<unsigned>>> columns;
  for (const auto& m : actions) {
    std::vector<std::vector<unsigned>> cols(dim, std::vector<unsigned>(dim));
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i) cols[j][i] = m(i, j).residue();
    columns.push_back(std::move(cols));
  }

  // Odometer over F_p^dim; wrapping p-1 -> 0 is also +1 mod p, so each
  // digit change adds the corresponding column to every image.
  std::vector<unsigned> digits(dim, 0);
  std::vector<std::vector<unsigned>> images(actions.size(),
                                            std::vector<unsigned>(dim, 0));
  auto killed = [&] {
    return std::all_of(images.begin(), images.end(), [](const auto& v) {
      return std::all_of(v.begin(), v.end(), [](unsigned x) { return x == 0; });
    });
  };
  std::size_t count = 1;  // the zero vector
  for (;;) {
    std::size_t k = 0;
    for (; k < dim; ++k) {
      digits[k] = (digits[k] + 1) % p;
      for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t i = 0; i < dim; ++i)
          images[a][i] = (images[a][i] + columns[a][k][i]) % p;
      if (digits[k] != 0) break;
    }
    if (k == dim) break;
    if (killed()) ++count;
  }

  std::size_t exponent = 0;
  for (std::size_t c = count; c > 1; c /= p) {
    if (c % p != 0)
      throw InvariantViolation("killed set of size " + std::to_string(count) +
                               " is not a subspace");
    ++exponent;
  }
  return exponent;
}

}  // namespace irr::harness
