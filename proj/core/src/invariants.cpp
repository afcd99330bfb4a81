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
#include "irr/invariants.hpp"

#include <algorithm>

#include "irr/artinian.hpp"
#include "irr/error.hpp"
#include "irr/idealization.hpp"
#include "irr/parallel.hpp"

namespace irr {

namespace {

long long socle_dimension(const QuotientModel& q) {
  return static_cast<long long>(socle(*q.module).dim());
}

long long integral(const mpq_class& q) {
  if (q.get_den() != 1)
    throw NotStabilizedError("non-integer coefficients (" + q.get_str() +
                             "); the dimension or n_max is wrong");
  return q.get_num().get_si();
}

Table table_of(const PresentedModule& module, const IdealHandle& ideal,
               unsigned n_max, const EngineOptions& opts, bool socle_rows) {
  return parallel_map(n_max + 1, opts.threads, [&](std::size_t n) {
    return socle_rows ? ir_value(module, ideal, static_cast<unsigned>(n), opts)
                      : hs_value(module, ideal, static_cast<unsigned>(n), opts);
  });
}

}  // namespace

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  mpz_class r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= static_cast<long>(n - i);
    r /= static_cast<long>(i + 1);
  }
  return r.get_si();
}

long long ir_value(const PresentedModule& module, const IdealHandle& ideal,
                   unsigned n, const EngineOptions& opts) {
  return socle_dimension(artinian_quotient(module, ideal, n, opts));
}

long long hs_value(const PresentedModule& module, const IdealHandle& ideal,
                   unsigned n, const EngineOptions& opts) {
  return static_cast<long long>(
      artinian_quotient(module, ideal, n, opts).module->dim());
}

Table ir_table(const PresentedModule& module, const IdealHandle& ideal,
               unsigned n_max, const EngineOptions& opts) {
  return table_of(module, ideal, n_max, opts, true);
}

Table hs_table(const PresentedModule& module, const IdealHandle& ideal,
               unsigned n_max, const EngineOptions& opts) {
  return table_of(module, ideal, n_max, opts, false);
}

unsigned detect_dimension(std::span<const long long> table, unsigned window) {
  if (window == 0) throw PreconditionError("window must be positive");
  std::vector<long long> diffs(table.begin(), table.end());
  for (unsigned d = 0; diffs.size() > window; ++d) {
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
      diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
    if (diffs.size() < window) break;
    if (std::all_of(diffs.end() - window, diffs.end(),
                    [](long long v) { return v == 0; }))
      return d;
  }
  throw NotStabilizedError("not stabilized; increase n_max");
}

std::vector<mpq_class> fit_in_binomial_basis(std::span<const long long> table,
                                             unsigned degree,
                                             unsigned window) {
  const std::size_t points = degree + 1 + window;
  if (table.size() < points)
    throw NotStabilizedError("not stabilized; table has " +
                             std::to_string(table.size()) + " rows, fit needs " +
                             std::to_string(points) + "; increase n_max");
  const Field q = Field::rationals();
  const std::size_t width = degree + 2;
  std::vector<Vector> rows;
  for (std::size_t n = table.size() - points; n < table.size(); ++n) {
    Vector row;
    for (unsigned k = 0; k <= degree; ++k)
      row.push_back(Scalar::from_int(
          q, binomial(static_cast<long long>(n) + k, k)));
    row.push_back(Scalar::from_int(q, table[n]));
    rows.push_back(std::move(row));
  }
  const auto pivots = row_reduce(rows, width);
  std::vector<mpq_class> coeffs(degree + 1);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == degree + 1)
      throw NotStabilizedError("not stabilized; trailing rows are not a "
                               "polynomial of degree " + std::to_string(degree));
    coeffs[pivots[r]] = rows[r][degree + 1].rational();
  }
  return coeffs;
}

long long BinomialPolynomial::evaluate(long long n) const {
  long long value = 0;
  for (unsigned i = 0; i < coefficients.size(); ++i) {
    const long long k = static_cast<long long>(t) - 1 - i;
    const long long term = coefficients[i] * binomial(n + k, k);
    value += (i % 2 == 0) ? term : -term;
  }
  return value;
}

BinomialPolynomial fit_binomial(std::span<const long long> table, unsigned t,
                                unsigned window) {
  if (t == 0) throw PreconditionError("fit_binomial needs t >= 1");
  const auto c = fit_in_binomial_basis(table, t - 1, window);
  BinomialPolynomial out;
  out.t = t;
  for (unsigned i = 0; i < t; ++i) {
    const long long v = integral(c[t - 1 - i]);
    out.coefficients.push_back(i % 2 == 0 ? v : -v);
  }
  std::size_t from = table.size();
  while (from > 0 && out.evaluate(static_cast<long long>(from) - 1) ==
                         table[from - 1])
    --from;
  out.stable_from = from;
  return out;
}

CmReport cm_check(const PresentedModule& module, const IdealHandle& q,
                  const TableParameters& params, const EngineOptions& opts) {
  CmReport out;
  out.hilbert_samuel = hs_table(module, q, params.n_max, opts);
  out.dimension = detect_dimension(out.hilbert_samuel, params.window);
  const std::size_t gens = q.power_generators(1).size();
  if (gens != out.dimension)
    throw PreconditionError("not a parameter ideal: " + std::to_string(gens) +
                            " generators, dimension " +
                            std::to_string(out.dimension));
  const auto c =
      fit_in_binomial_basis(out.hilbert_samuel, out.dimension, params.window);
  out.multiplicity = integral(c[out.dimension]);
  out.colength = out.hilbert_samuel.front();
  out.cohen_macaulay = out.colength == out.multiplicity;
  return out;
}

long long cm_type(const PresentedModule& module, const IdealHandle& q,
                  const TableParameters& params, const EngineOptions& opts) {
  if (!cm_check(module, q, params, opts).cohen_macaulay)
    throw PreconditionError("module not CM with respect to Q; type undefined");
  return ir_value(module, q, 0, opts);
}

TheoremVerdict theorem_check(const PresentedModule& module,
                             const IdealHandle& ideal, unsigned n,
                             const EngineOptions& opts) {
  const auto& ring = module.ring();
  TheoremVerdict v;
  v.n = n;

  const QuotientModel qm = artinian_quotient(module, ideal, n, opts);
  const QuotientModel qr =
      artinian_quotient(PresentedModule::free(ring, 1), ideal, n, opts);
  const IdealizationRing a = idealize(module);
  const QuotientModel qa = artinian_quotient(
      PresentedModule::free(a.ring(), 1), extend_ideal(a, ideal), n, opts);

  v.ir_module = socle_dimension(qm);
  v.ir_ring = socle_dimension(qr);
  v.ir_idealization = socle_dimension(qa);
  v.length_module = static_cast<long long>(qm.module->dim());
  v.length_ring = static_cast<long long>(qr.module->dim());
  v.length_idealization = static_cast<long long>(qa.module->dim());

  v.lower_bound = v.ir_module <= v.ir_idealization;
  v.upper_bound = v.ir_idealization <= v.ir_ring + v.ir_module;
  v.strict = v.ir_module < v.ir_idealization &&
             v.ir_idealization < v.ir_ring + v.ir_module;

  v.faithful.equality = v.ir_module == v.ir_idealization;
  v.faithful.test = is_faithful(*qm.module);

  // qm and qr share the host R / I^{n+1}; its socle is (I^{n+1} : m).
  const Subspace ring_socle = socle(*qr.module);
  bool kills = true;
  for (const auto& r : ring_socle.basis())
    for (const auto& g : qm.module->generators())
      kills = kills && is_zero(qm.module->act(r, g));
  v.colon.equality = v.ir_idealization == v.ir_ring + v.ir_module;
  v.colon.test = kills;
  v.socle_overlap = static_cast<long long>(
      ring_socle.intersect(annihilator(*qm.module)).dim());

  auto flag = [&](bool ok, std::string what) {
    if (!ok) v.violations.push_back(std::move(what));
  };
  flag(v.lower_bound, "lower bound ir_M <= ir_RxM fails");
  flag(v.upper_bound, "upper bound ir_RxM <= ir_R + ir_M fails");
  flag(v.faithful.equality == v.faithful.test,
       "criterion (i): equality and faithfulness disagree");
  flag(v.colon.equality == v.colon.test,
       "criterion (ii): equality and colon test disagree");
  flag(v.ir_idealization == v.ir_module + v.socle_overlap,
       "socle split: ir_RxM != ir_M + overlap");
  flag(v.length_idealization == v.length_ring + v.length_module,
       "length identity fails");
  return v;
}

CorollaryReport corollary_check(const PresentedModule& module,
                                const IdealHandle& q,
                                const TableParameters& params,
                                const EngineOptions& opts) {
  const auto free_ring = PresentedModule::free(module.ring(), 1);
  if (!cm_check(free_ring, q, params, opts).cohen_macaulay)
    throw PreconditionError("ring not CM with respect to Q");
  if (!cm_check(module, q, params, opts).cohen_macaulay)
    throw PreconditionError("module not CM with respect to Q");
  CorollaryReport out;
  out.type_ring = ir_value(free_ring, q, 0, opts);
  out.type_module = ir_value(module, q, 0, opts);

  const IdealizationRing a = idealize(module);
  const auto free_a = PresentedModule::free(a.ring(), 1);
  const IdealHandle j = extend_ideal(a, q);
  try {
    out.idealization_cm = cm_check(free_a, j, params, opts).cohen_macaulay;
  } catch (const Error& e) {
    out.violations.push_back(std::string("idealization CM check: ") + e.what());
  }
  if (!out.idealization_cm && out.violations.empty())
    out.violations.push_back("idealization is not CM with respect to Q");
  out.type_idealization = ir_value(free_a, j, 0, opts);

  out.verdict = theorem_check(module, q, 0, opts);
  if (out.verdict.ir_ring != out.type_ring ||
      out.verdict.ir_module != out.type_module ||
      out.verdict.ir_idealization != out.type_idealization)
    out.violations.push_back("types disagree with the n = 0 verdict");
  return out;
}

CtkqReport eq_ctkq_check(const PresentedModule& module, const IdealHandle& q,
                         const TableParameters& params,
                         const EngineOptions& opts) {
  const CmReport cm = cm_check(module, q, params, opts);
  if (!cm.cohen_macaulay)
    throw PreconditionError("module not CM with respect to Q");
  CtkqReport out;
  out.dimension = cm.dimension;
  out.ir = ir_table(module, q, params.n_max, opts);
  out.type = out.ir.front();
  const long long t = out.dimension;
  for (unsigned n = 0; n <= params.n_max; ++n)
    out.predicted.push_back(t == 0 ? out.type
                                   : out.type * binomial(n + t - 1, t - 1));
  out.holds = out.ir == out.predicted;
  return out;
}

}  // namespace irr
