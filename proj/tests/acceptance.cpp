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
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runtime limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "irr/harness/builtins.hpp"
#include "irr/harness/fuzz.hpp"
#include "irr/harness/scenario.hpp"
#include "irr/invariants.hpp"
#include "support.hpp"

using namespace irr_test;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (secs > limit_seconds) {
    out.pass = false;
    out.detail += " (over the " + std::to_string(limit_seconds) + " s limit)";
  }
  if (!out.pass) ++failures;
  std::printf("%s [%d] %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", id,
              title, out.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string table_text(const Table& t) {
  std::string s;
  for (auto v : t) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

Outcome cusp_multiplicity(Field f) {
  const auto ring = cusp(f);
  const auto free = PresentedModule::free(ring, 1);
  const auto m = maximal_ideal(ring);
  const auto j = ideal(ring, {"x1"});
  const Table t = ir_table(free, m, 5);
  const auto fm = fit_binomial(ir_table(free, m, 6), 1);
  const auto fj = fit_binomial(ir_table(free, j, 6), 1);
  const auto red = is_reduction(j, m);
  const bool pass = t == Table{1, 2, 2, 2, 2, 2} &&
                    fm.coefficients == std::vector<long long>{2} &&
                    fj.coefficients == std::vector<long long>{1} &&
                    red.is_reduction && red.reduction_number == 1u;
  return {pass, f.to_string() + ": ir " + table_text(t) + ", f0(m) = " +
                    std::to_string(fm.coefficients[0]) + ", f0((x1)) = " +
                    std::to_string(fj.coefficients[0]) + ", reduction " +
                    (red.is_reduction ? "true" : "false") + " r = " +
                    (red.reduction_number
                         ? std::to_string(*red.reduction_number)
                         : std::string("none"))};
}

Outcome ctkq_pair(const PresentedModule& module, const IdealHandle& q,
                  const std::string& label) {
  TableParameters params;
  params.n_max = 6;
  const CmReport cm = cm_check(module, q, params);
  const CtkqReport r = eq_ctkq_check(module, q, params);
  return {cm.cohen_macaulay && r.holds,
          label + ": CM " + (cm.cohen_macaulay ? "yes" : "no") + ", ir " +
              table_text(r.ir) + " vs " + table_text(r.predicted)};
}

Outcome fuzz_outcome(const harness::FuzzSummary& s, std::size_t min_cases) {
  std::string detail = std::to_string(s.cases) + " cases, " +
                       std::to_string(s.checks) + " checks, " +
                       std::to_string(s.failures.size()) + " failures";
  if (!s.failures.empty()) detail += "; first: " + s.failures.front();
  return {s.ok() && s.cases >= min_cases, detail};
}

}  // namespace

int main() {
  criterion(1, "cusp: ir table, f0(m) = 2 != f0((x1)) = 1, (x1) reduces m",
            5.0, [] { return cusp_multiplicity(kF32003); });
  criterion(1, "same over Q", 30.0, [] { return cusp_multiplicity(kQ); });

  criterion(2, "CM pairs: ir = f0 * C(n+t-1, t-1) for n <= 6", 60.0, [] {
    const auto c = cusp();
    const auto p = presented(kF32003, {"x", "y"}, {});
    const Outcome a =
        ctkq_pair(PresentedModule::free(c, 1), ideal(c, {"x1"}), "cusp (x1)");
    const Outcome b =
        ctkq_pair(PresentedModule::free(p, 1), maximal_ideal(p), "plane m");
    return Outcome{a.pass && b.pass, a.detail + "; " + b.detail};
  });

  criterion(3, "inequality chain and both criteria on random instances", 60.0,
            [] {
              return fuzz_outcome(
                  harness::theorem_fuzz(20261016, 200, 3), 200);
            });

  criterion(4, "colon formula in the idealization matches the definition",
            60.0, [] {
              return fuzz_outcome(harness::lemma_fuzz(20261016, 100), 100);
            });

  criterion(5, "3-generated curve, M = (x1, x3), Q = (x1): strict chain",
            120.0, [] {
              const auto ring = curve345();
              const auto module = PresentedModule::from_ideal(
                  ring, polys(ring->ambient(), {"x1", "x3"}));
              const auto c = corollary_check(module, ideal(ring, {"x1"}));
              const bool strict = c.type_module < c.type_idealization &&
                                  c.type_idealization <
                                      c.type_ring + c.type_module;
              return Outcome{
                  c.type_ring == 2 && c.type_module == 2 && strict &&
                      c.type_idealization == 3 && c.consistent(),
                  "r(R) = " + std::to_string(c.type_ring) + ", r(M) = " +
                      std::to_string(c.type_module) + ", r(R x M) = " +
                      std::to_string(c.type_idealization)};
            });

  criterion(6, "syzygy M = m of the cusp, Q = (x1): (Q:m)M = QM", 60.0, [] {
    const auto ring = cusp();
    const auto module = PresentedModule::from_ideal(
        ring, polys(ring->ambient(), {"x1", "x2"}));
    const auto c = corollary_check(module, ideal(ring, {"x1"}));
    const bool pass = c.verdict.colon.test && c.verdict.colon.equality &&
                      c.type_idealization == c.type_ring + c.type_module &&
                      c.consistent();
    return Outcome{pass, "colon test " +
                             std::string(c.verdict.colon.test ? "true"
                                                              : "false") +
                             ", types " + std::to_string(c.type_ring) + " + " +
                             std::to_string(c.type_module) + " = " +
                             std::to_string(c.type_idealization)};
  });

  criterion(7, "every builtin gives the same report with truncation +2",
            300.0, [] {
              std::string detail;
              bool pass = true;
              for (const auto& name : harness::builtin_names()) {
                const auto doc = harness::builtin_scenario(name);
                harness::RunOptions base;
                harness::RunOptions wide;
                wide.truncation_extra = 2;
                const auto a =
                    harness::run_scenario(harness::load_scenario(doc, base));
                const auto b =
                    harness::run_scenario(harness::load_scenario(doc, wide));
                const bool same =
                    harness::deterministic_part(a.document) ==
                    harness::deterministic_part(b.document);
                pass &= same && a.ok;
                detail += (detail.empty() ? "" : ", ") + name +
                          (same && a.ok ? " same" : " DIFFERS");
              }
              return Outcome{pass, detail};
            });

  criterion(8, "enumerated socle equals linear-algebra socle", 60.0, [] {
    return fuzz_outcome(harness::socle_fuzz(20261016, 150), 100);
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "OK" : "FAILED",
              failures);
  return failures == 0 ? 0 : 1;
}
