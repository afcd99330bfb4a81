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
#ifndef IRR_INVARIANTS_HPP
#define IRR_INVARIANTS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "irr/local_ring.hpp"

namespace irr {

using Table = std::vector<long long>;

/// dim Soc(M / I^{n+1} M).
long long ir_value(const PresentedModule& module, const IdealHandle& ideal,
                   unsigned n, const EngineOptions& opts = {});
/// Length of M / I^{n+1} M.
long long hs_value(const PresentedModule& module, const IdealHandle& ideal,
                   unsigned n, const EngineOptions& opts = {});

/// Rows n = 0..n_max, evaluated on opts.threads workers.
Table ir_table(const PresentedModule& module, const IdealHandle& ideal,
               unsigned n_max, const EngineOptions& opts = {});
Table hs_table(const PresentedModule& module, const IdealHandle& ideal,
               unsigned n_max, const EngineOptions& opts = {});

/// Least d whose (d+1)-st differences vanish on the last \p window entries.
/// Throws NotStabilizedError when no such d fits in the table.
unsigned detect_dimension(std::span<const long long> table,
                          unsigned window = 3);

/// Coefficients c_0..c_degree with table[n] = sum_k c_k C(n+k, k) on the
/// trailing degree + 1 + window entries. Throws NotStabilizedError when the
/// table is too short or the trailing entries are not polynomial.
std::vector<mpq_class> fit_in_binomial_basis(std::span<const long long> table,
                                             unsigned degree,
                                             unsigned window = 3);

/// f^0 C(n+t-1, t-1) - f^1 C(n+t-2, t-2) + ... + (-1)^{t-1} f^{t-1}.
struct BinomialPolynomial {
  unsigned t = 0;
  std::vector<long long> coefficients;  // f^0 .. f^{t-1}
  std::size_t stable_from = 0;

  long long evaluate(long long n) const;
};

/// Throws PreconditionError for t = 0, NotStabilizedError for a short or
/// non-polynomial tail, and NotStabilizedError("non-integer coefficients")
/// when the exact fit is not integral.
BinomialPolynomial fit_binomial(std::span<const long long> table, unsigned t,
                                unsigned window = 3);

/// C(n, k) for n >= k >= 0, otherwise 0.
long long binomial(long long n, long long k);

struct TableParameters {
  unsigned n_max = 6;
  unsigned window = 3;
};

struct CmReport {
  bool cohen_macaulay = false;
  unsigned dimension = 0;
  long long colength = 0;      // length of M / QM
  long long multiplicity = 0;  // e(Q; M)
  Table hilbert_samuel;
};

/// Throws PreconditionError("not a parameter ideal") when Q needs a number of
/// generators different from the detected dimension.
CmReport cm_check(const PresentedModule& module, const IdealHandle& q,
                  const TableParameters& params = {},
                  const EngineOptions& opts = {});

/// dim Soc(M / QM); throws PreconditionError unless cm_check passes.
long long cm_type(const PresentedModule& module, const IdealHandle& q,
                  const TableParameters& params = {},
                  const EngineOptions& opts = {});

struct CriterionResult {
  bool equality = false;  // the invariant side
  bool test = false;      // the structural side
};

struct TheoremVerdict {
  unsigned n = 0;
  long long ir_module = 0;
  long long ir_ring = 0;
  long long ir_idealization = 0;
  bool lower_bound = false;
  bool upper_bound = false;
  bool strict = false;
  /// ir_M = ir_{R⋉M} versus faithfulness of M / I^{n+1} M.
  CriterionResult faithful;
  /// ir_{R⋉M} = ir_R + ir_M versus (I^{n+1} : m) M = I^{n+1} M.
  CriterionResult colon;
  /// dim of (I^{n+1} : m) ∩ (I^{n+1} M : M), modulo I^{n+1}.
  long long socle_overlap = 0;
  long long length_ring = 0;
  long long length_module = 0;
  long long length_idealization = 0;
  std::vector<std::string> violations;

  bool consistent() const noexcept { return violations.empty(); }
};

TheoremVerdict theorem_check(const PresentedModule& module,
                             const IdealHandle& ideal, unsigned n,
                             const EngineOptions& opts = {});

struct CorollaryReport {
  long long type_ring = 0;
  long long type_module = 0;
  long long type_idealization = 0;
  bool idealization_cm = false;
  TheoremVerdict verdict;
  std::vector<std::string> violations;

  bool consistent() const noexcept {
    return violations.empty() && verdict.consistent();
  }
};

/// Throws PreconditionError unless R and M are Cohen-Macaulay for Q.
CorollaryReport corollary_check(const PresentedModule& module,
                                const IdealHandle& q,
                                const TableParameters& params = {},
                                const EngineOptions& opts = {});

struct CtkqReport {
  bool holds = false;
  unsigned dimension = 0;
  long long type = 0;
  Table ir;
  Table predicted;
};

/// ir_M(Q^{n+1} M) = f^0 C(n+t-1, t-1) for every n <= n_max.
CtkqReport eq_ctkq_check(const PresentedModule& module, const IdealHandle& q,
                         const TableParameters& params = {},
                         const EngineOptions& opts = {});

}  // namespace irr

#endif  // IRR_INVARIANTS_HPP
