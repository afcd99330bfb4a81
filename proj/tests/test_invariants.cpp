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
#include "doctest.h"
#include "irr/error.hpp"
#include "irr/harness/fuzz.hpp"
#include "irr/invariants.hpp"
#include "support.hpp"

using namespace irr_test;

namespace {

RingPtr plane(Field f = kF32003) { return presented(f, {"x", "y"}, {}); }

PresentedModule free1(const RingPtr& ring) {
  return PresentedModule::free(ring, 1);
}

PresentedModule two_generated_module(const RingPtr& ring) {
  return PresentedModule::from_ideal(ring, polys(ring->ambient(),
                                                 {"x1", "x3"}));
}

}  // namespace

TEST_SUITE("ir and hs values") {
  TEST_CASE("cusp with the maximal ideal") {
    const auto ring = cusp();
    CHECK(ir_value(free1(ring), maximal_ideal(ring), 0) == 1);
    CHECK(ir_value(free1(ring), maximal_ideal(ring), 2) == 2);
    CHECK(ir_table(free1(ring), maximal_ideal(ring), 5) ==
          Table{1, 2, 2, 2, 2, 2});
  }

  TEST_CASE("the plane: m^{n+1} : m = m^n") {
    const auto ring = plane();
    CHECK(ir_value(free1(ring), maximal_ideal(ring), 3) == 4);
    CHECK(ir_table(free1(ring), maximal_ideal(ring), 4) ==
          Table{1, 2, 3, 4, 5});
  }

  TEST_CASE("Hilbert-Samuel tables of the cusp") {
    const auto ring = cusp();
    CHECK(hs_table(free1(ring), maximal_ideal(ring), 2) == Table{1, 3, 5});
    CHECK(hs_table(free1(ring), ideal(ring, {"x1"}), 2) == Table{2, 4, 6});
  }

  TEST_CASE("property: hs at level 0 is positive (Nakayama)") {
    for (std::size_t i = 0; i < 40; ++i) {
      harness::FuzzGenerator gen(harness::case_seed(55, i));
      const auto inst = gen.instance();
      CHECK(hs_value(inst.module, inst.ideal, 0) >= 1);
      CHECK(ir_value(inst.module, inst.ideal, 0) >= 1);
    }
  }

  TEST_CASE("table rows are independent of the thread count") {
    const auto ring = curve345();
    const auto module = two_generated_module(ring);
    EngineOptions par;
    par.threads = 4;
    CHECK(ir_table(module, maximal_ideal(ring), 5) ==
          ir_table(module, maximal_ideal(ring), 5, par));
  }
}

TEST_SUITE("detect_dimension") {
  TEST_CASE("examples") {
    CHECK(detect_dimension(Table{1, 3, 5, 7, 9}) == 1);
    CHECK(detect_dimension(Table{1, 3, 6, 10, 15, 21}) == 2);
    CHECK(detect_dimension(Table{4, 4, 4, 4}) == 0);
    CHECK(detect_dimension(Table{2, 4, 6, 6, 6, 6}) == 0);
  }

  TEST_CASE("an exponential table never stabilizes") {
    CHECK_THROWS_AS(detect_dimension(Table{1, 2, 4, 8, 16, 32}),
                    NotStabilizedError);
  }

  TEST_CASE("property: polynomial tables of degree d are detected") {
    Gen g(7);
    for (int i = 0; i < 100; ++i) {
      const unsigned d = static_cast<unsigned>(g.below(4));
      std::vector<long long> c(d + 1);
      for (auto& x : c) x = g.between(-5, 5);
      c[d] = g.between(1, 5);
      Table t;
      for (long long n = 0; n < static_cast<long long>(d) + 6; ++n) {
        long long v = 0;
        for (unsigned k = 0; k <= d; ++k) v += c[k] * binomial(n + k, k);
        t.push_back(v);
      }
      CHECK(detect_dimension(t) == d);
    }
  }
}

TEST_SUITE("fit_binomial") {
  TEST_CASE("eventually constant ir table") {
    const auto f = fit_binomial(Table{1, 2, 2, 2, 2, 2}, 1);
    CHECK(f.coefficients == std::vector<long long>{2});
    CHECK(f.stable_from == 1);
  }

  TEST_CASE("linear ir table of the plane") {
    const auto f = fit_binomial(Table{1, 2, 3, 4, 5, 6}, 2);
    CHECK(f.coefficients == std::vector<long long>{1, 0});
    CHECK(f.stable_from == 0);
  }

  TEST_CASE("constant table") {
    const auto f = fit_binomial(Table{3, 3, 3, 3}, 1);
    CHECK(f.coefficients == std::vector<long long>{3});
    CHECK(f.stable_from == 0);
  }

  TEST_CASE("a short or inconsistent trailing window is rejected") {
    CHECK_THROWS_AS(fit_binomial(Table{1, 2, 4, 8, 16, 32}, 2),
                    NotStabilizedError);
    CHECK_THROWS(fit_binomial(Table{1, 2}, 1));
    CHECK_THROWS(fit_binomial(Table{1, 2, 3}, 0));
  }

  TEST_CASE("alternating signs of the lower coefficients") {
    // 3 C(n+1, 1) - 2 C(n, 0) = 3n + 1.
    const auto f = fit_binomial(Table{1, 4, 7, 10, 13}, 2);
    CHECK(f.coefficients == std::vector<long long>{3, 2});
  }

  TEST_CASE("property: the fit reproduces the table from stable_from on") {
    for (std::size_t i = 0; i < 30; ++i) {
      harness::FuzzGenerator gen(harness::case_seed(66, i));
      const auto inst = gen.instance();
      const Table t = ir_table(inst.module, inst.ideal, 6);
      // Fuzz rings are Artinian: I^{n+1} M vanishes eventually and the
      // table becomes constant, which the degree-0 fit must reproduce.
      const auto f = fit_binomial(t, 1);
      for (std::size_t n = f.stable_from; n < t.size(); ++n) {
        CHECK(f.evaluate(static_cast<long long>(n)) == t[n]);
      }
    }
    const auto ring = curve345();
    const Table t = ir_table(two_generated_module(ring), maximal_ideal(ring), 6);
    const auto f = fit_binomial(t, 1);
    for (std::size_t n = f.stable_from; n < t.size(); ++n) {
      CHECK(f.evaluate(static_cast<long long>(n)) == t[n]);
    }
  }

  TEST_CASE("a reduction need not preserve f0") {
    const auto ring = cusp();
    const auto m = maximal_ideal(ring);
    const auto j = ideal(ring, {"x1"});
    REQUIRE(is_reduction(j, m).is_reduction);
    const auto fm = fit_binomial(ir_table(free1(ring), m, 6), 1);
    const auto fj = fit_binomial(ir_table(free1(ring), j, 6), 1);
    CHECK(fm.coefficients[0] == 2);
    CHECK(fj.coefficients[0] == 1);
    CHECK(fm.coefficients[0] != fj.coefficients[0]);
  }
}

TEST_SUITE("cm_check and cm_type") {
  TEST_CASE("the cusp with Q = (x1)") {
    const auto ring = cusp();
    const CmReport r = cm_check(free1(ring), ideal(ring, {"x1"}));
    CHECK(r.cohen_macaulay);
    CHECK(r.dimension == 1);
    CHECK(r.colength == 2);
    CHECK(r.multiplicity == 2);
    CHECK(cm_type(free1(ring), ideal(ring, {"x1"})) == 1);
  }

  TEST_CASE("the plane is regular") {
    const auto ring = plane();
    const CmReport r = cm_check(free1(ring), maximal_ideal(ring));
    CHECK(r.cohen_macaulay);
    CHECK(r.dimension == 2);
    CHECK(r.colength == 1);
    CHECK(r.multiplicity == 1);
    CHECK(cm_type(free1(ring), maximal_ideal(ring)) == 1);
  }

  TEST_CASE("k[x,y]/(x^2, xy) is not Cohen-Macaulay") {
    const auto ring = presented(kF32003, {"x", "y"}, {"x^2", "x*y"});
    const CmReport r = cm_check(free1(ring), ideal(ring, {"y"}));
    CHECK_FALSE(r.cohen_macaulay);
    CHECK(r.colength == 2);
    CHECK(r.multiplicity == 1);
    CHECK(r.hilbert_samuel == Table{2, 3, 4, 5, 6, 7, 8});
    CHECK_THROWS_AS(cm_type(free1(ring), ideal(ring, {"y"})),
                    PreconditionError);
  }

  TEST_CASE("the type of the 3-generated curve ring is 2") {
    const auto ring = curve345();
    CHECK(cm_type(free1(ring), ideal(ring, {"x1"})) == 2);
    CHECK(cm_type(two_generated_module(ring), ideal(ring, {"x1"})) == 2);
  }

  TEST_CASE("Q must have as many generators as the dimension") {
    const auto ring = cusp();
    CHECK_THROWS_AS(cm_check(free1(ring), maximal_ideal(ring)),
                    PreconditionError);
  }
}

TEST_SUITE("theorem_check") {
  TEST_CASE("free module over the cusp at n = 1") {
    const auto ring = cusp();
    const auto v = theorem_check(free1(ring), maximal_ideal(ring), 1);
    CHECK(v.ir_module == 2);
    CHECK(v.ir_ring == 2);
    CHECK(v.ir_idealization == 2);
    CHECK(v.faithful.test);
    CHECK(v.faithful.equality);
    CHECK_FALSE(v.colon.test);
    CHECK_FALSE(v.colon.equality);
    CHECK(v.consistent());
  }

  TEST_CASE("the 3-generated curve with M = (x1, x3) and Q = (x1)") {
    const auto ring = curve345();
    const auto v = theorem_check(two_generated_module(ring), ideal(ring, {"x1"}), 0);
    CHECK(v.ir_module == 2);
    CHECK(v.ir_ring == 2);
    CHECK(v.ir_module < v.ir_idealization);
    CHECK(v.ir_idealization < v.ir_ring + v.ir_module);
    CHECK(v.ir_idealization == 3);
    CHECK(v.strict);
    CHECK(v.consistent());
  }

  TEST_CASE("the residue field as a module") {
    const auto ring = cusp();
    const auto r = ring->ambient();
    const auto k = PresentedModule::from_presentation(
        ring, 1, {vec(r, {"x1"}), vec(r, {"x2"})});
    const auto v = theorem_check(k, maximal_ideal(ring), 0);
    // (m : m) = R, so (m : m) k = k while m k = 0: the colon criterion
    // fails. k is faithful over R/m = k, and A/J = k[e]/(e^2) has a
    // one-dimensional socle.
    CHECK(v.ir_module == 1);
    CHECK(v.ir_ring == 1);
    CHECK(v.ir_idealization == 1);
    CHECK(v.faithful.test);
    CHECK(v.faithful.equality);
    CHECK_FALSE(v.colon.test);
    CHECK_FALSE(v.colon.equality);
    CHECK(v.consistent());
  }

  TEST_CASE("property: chain, criteria and socle split on random instances") {
    int seen[2][2] = {{0, 0}, {0, 0}};
    for (std::size_t i = 0; i < 60; ++i) {
      harness::FuzzGenerator gen(harness::case_seed(77, i));
      const auto inst = gen.instance();
      for (unsigned n = 0; n <= 2; ++n) {
        const auto v = theorem_check(inst.module, inst.ideal, n);
        INFO(inst.describe(), " n=", n);
        CHECK(v.ir_module <= v.ir_idealization);
        CHECK(v.ir_idealization <= v.ir_ring + v.ir_module);
        CHECK(v.faithful.equality == v.faithful.test);
        CHECK(v.colon.equality == v.colon.test);
        CHECK(v.ir_idealization == v.ir_module + v.socle_overlap);
        CHECK(v.length_idealization == v.length_ring + v.length_module);
        CHECK(v.consistent());
        ++seen[0][v.faithful.test ? 1 : 0];
        ++seen[1][v.colon.test ? 1 : 0];
      }
    }
    // Both criteria are exercised in both directions.
    CHECK(seen[0][0] > 0);
    CHECK(seen[0][1] > 0);
    CHECK(seen[1][0] > 0);
    CHECK(seen[1][1] > 0);
    MESSAGE("faithful ", seen[0][1], "/", seen[0][0] + seen[0][1],
            ", colon ", seen[1][1], "/", seen[1][0] + seen[1][1]);
  }
}

TEST_SUITE("corollary_check") {
  TEST_CASE("free module: the faithful case") {
    const auto ring = cusp();
    const auto c = corollary_check(free1(ring), ideal(ring, {"x1"}));
    CHECK(c.type_idealization == 1);
    CHECK(c.type_ring == 1);
    CHECK(c.verdict.faithful.test);
    CHECK(c.consistent());
  }

  TEST_CASE("first syzygy of the residue field") {
    const auto ring = cusp();
    const auto m = PresentedModule::from_ideal(
        ring, polys(ring->ambient(), {"x1", "x2"}));
    const auto c = corollary_check(m, ideal(ring, {"x1"}));
    CHECK(c.type_ring == 1);
    CHECK(c.type_module == 2);
    CHECK(c.type_idealization == 3);
    CHECK(c.verdict.colon.test);
    CHECK(c.idealization_cm);
    CHECK(c.consistent());
  }

  TEST_CASE("strict chain for the 3-generated curve") {
    const auto ring = curve345();
    const auto c = corollary_check(two_generated_module(ring), ideal(ring, {"x1"}));
    CHECK(c.type_ring == 2);
    CHECK(c.type_module == 2);
    CHECK(c.type_module < c.type_idealization);
    CHECK(c.type_idealization < c.type_ring + c.type_module);
    CHECK(c.consistent());
  }
}

TEST_SUITE("eq_ctkq_check") {
  TEST_CASE("the cusp with Q = (x1) has constant ir") {
    const auto ring = cusp();
    const auto r = eq_ctkq_check(free1(ring), ideal(ring, {"x1"}));
    CHECK(r.holds);
    CHECK(r.type == 1);
    CHECK(r.ir == Table(7, 1));
    CHECK(r.predicted == r.ir);
  }

  TEST_CASE("the plane: ir = n + 1") {
    const auto ring = plane();
    const auto r = eq_ctkq_check(free1(ring), maximal_ideal(ring));
    CHECK(r.holds);
    CHECK(r.dimension == 2);
    CHECK(r.ir == Table{1, 2, 3, 4, 5, 6, 7});
  }

  TEST_CASE("non-CM instances are a precondition failure") {
    const auto ring = presented(kF32003, {"x", "y"}, {"x^2", "x*y"});
    CHECK_THROWS_AS(eq_ctkq_check(free1(ring), ideal(ring, {"y"})),
                    PreconditionError);
  }
}
