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
#include "irr/artinian.hpp"
#include "irr/error.hpp"
#include "irr/harness/fuzz.hpp"
#include "oracles/enumeration.hpp"
#include "support.hpp"

using namespace irr_test;

namespace {

AlgebraPtr algebra(const PolyRingPtr& r, const std::vector<std::string>& g) {
  const auto gens = polys(r, g);
  return build_algebra(buchberger(r, gens));
}

std::vector<Vector> coords(const ArtinianAlgebra& alg,
                           const std::vector<std::string>& elems) {
  std::vector<Vector> out;
  for (const auto& p : polys(alg.ring(), elems)) {
    out.push_back(alg.coordinates(p));
  }
  return out;
}

std::vector<QuotientModel> fuzz_models(std::uint64_t seed, std::size_t count) {
  std::vector<QuotientModel> out;
  for (std::size_t i = 0; i < count; ++i) {
    harness::FuzzGenerator gen(harness::case_seed(seed, i));
    const auto inst = gen.instance();
    out.push_back(artinian_quotient(inst.module, inst.ideal, i % 3));
  }
  return out;
}

}  // namespace

TEST_SUITE("build_algebra") {
  TEST_CASE("k[x]/(x^3) is a nilpotent shift") {
    const auto alg = algebra(poly_ring(kQ, {"x"}), {"x^3"});
    CHECK(alg->dim() == 3);
    const Matrix& x = alg->multiplication(0);
    CHECK_FALSE((x * x).is_zero());
    CHECK((x * x * x).is_zero());
    CHECK(alg->is_local());
  }

  TEST_CASE("k[x,y]/(x^2,xy,y^2) has dimension 3") {
    CHECK(algebra(poly_ring(kQ, {"x", "y"}), {"x^2", "x*y", "y^2"})->dim() ==
          3);
  }

  TEST_CASE("multiplication table over F_2 matches enumeration") {
    const auto r = poly_ring(kF2, {"x", "y"});
    const auto alg = algebra(r, {"x^2", "x*y", "y^2"});
    const oracle::MonomialAlgebra dense(2, {2, 2}, {{1, 1}});
    REQUIRE(dense.cardinality() == 8);
    for (std::size_t code = 0; code < dense.cardinality(); ++code) {
      const auto a = dense.decode(code);
      std::vector<Term> terms;
      for (std::size_t i = 0; i < dense.dim(); ++i) {
        if (a[i] == 0) continue;
        terms.push_back({Monomial::from_exponents(dense.basis()[i]),
                         Scalar::from_int(kF2, a[i])});
      }
      const Vector v = alg->coordinates(Polynomial::from_terms(r, terms));
      for (std::size_t var = 0; var < 2; ++var) {
        const auto prod = dense.multiply(a, dense.variable(var));
        std::vector<Term> pt;
        for (std::size_t i = 0; i < dense.dim(); ++i) {
          if (prod[i] == 0) continue;
          pt.push_back({Monomial::from_exponents(dense.basis()[i]),
                        Scalar::from_int(kF2, prod[i])});
        }
        CHECK(alg->multiplication(var).apply(v) ==
              alg->coordinates(Polynomial::from_terms(r, pt)));
      }
    }
  }

  TEST_CASE("an infinite quotient is rejected") {
    const auto r = poly_ring(kQ, {"x", "y"});
    const auto gens = polys(r, {"x^2"});
    CHECK_THROWS_AS(build_algebra(buchberger(r, gens)),
                    NotZeroDimensionalError);
  }
}

TEST_SUITE("module_model") {
  TEST_CASE("free module of rank one is the algebra itself") {
    const auto alg = algebra(poly_ring(kQ, {"x", "y"}), {"x^2", "y^3"});
    const ArtinianModule m = module_model(alg, 1, {});
    CHECK(m.dim() == alg->dim());
    for (std::size_t v = 0; v < 2; ++v) {
      CHECK(m.action(v) == alg->multiplication(v));
    }
  }

  TEST_CASE("quotient by the maximal ideal is the residue field") {
    const auto r = poly_ring(kQ, {"x", "y"});
    const auto alg = algebra(r, {"x^2", "y^3"});
    const std::vector<FreeVector> extra{vec(r, {"x"}), vec(r, {"y"})};
    CHECK(length(module_model(alg, 1, {}, extra)) == 1);
  }

  TEST_CASE("cyclic module R/(x^2) over k[x]/(x^3)") {
    const auto r = poly_ring(kQ, {"x"});
    const auto alg = algebra(r, {"x^3"});
    const std::vector<FreeVector> cols{vec(r, {"x^2"})};
    CHECK(length(module_model(alg, 1, cols)) == 2);
  }
}

TEST_SUITE("length") {
  TEST_CASE("residue field") {
    const auto ring = cusp();
    CHECK(quotient_algebra(maximal_ideal(ring), 0)->dim() == 1);
  }

  TEST_CASE("cusp modulo powers of the maximal ideal") {
    const auto ring = cusp();
    CHECK(quotient_algebra(maximal_ideal(ring), 1)->dim() == 3);
    CHECK(quotient_algebra(maximal_ideal(ring), 2)->dim() == 5);
  }
}

TEST_SUITE("socle") {
  TEST_CASE("k[x]/(x^3) has socle spanned by x^2") {
    const auto alg = algebra(poly_ring(kQ, {"x"}), {"x^3"});
    const Subspace s = socle(ArtinianModule::regular(alg));
    CHECK(s.dim() == 1);
    CHECK(s.contains(coords(*alg, {"x^2"})[0]));
  }

  TEST_CASE("k[x,y]/(x^2,xy,y^2) has socle spanned by x and y") {
    const auto alg = algebra(poly_ring(kQ, {"x", "y"}), {"x^2", "x*y", "y^2"});
    const Subspace s = socle(ArtinianModule::regular(alg));
    CHECK(s.dim() == 2);
    for (const auto& v : coords(*alg, {"x", "y"})) CHECK(s.contains(v));
  }

  TEST_CASE("cusp modulo the cube of the maximal ideal has a 2-dim socle") {
    const auto ring = cusp();
    const auto alg = quotient_algebra(maximal_ideal(ring), 2);
    CHECK(socle(ArtinianModule::regular(alg)).dim() == 2);
  }
}

TEST_SUITE("colons") {
  TEST_CASE("colon by x in k[x]/(x^3) modulo (x^2)") {
    const auto r = poly_ring(kQ, {"x"});
    const auto alg = algebra(r, {"x^3"});
    const std::vector<FreeVector> cols{vec(r, {"x^2"})};
    const ArtinianModule m = module_model(alg, 1, cols);
    const auto gens = coords(*alg, {"x"});
    const Subspace c = colon_module(m, gens);
    CHECK(c.dim() == 1);
    CHECK(c.contains(m.coordinates(vec(r, {"x"}))));
  }

  TEST_CASE("colon by the unit ideal is zero") {
    const auto r = poly_ring(kQ, {"x"});
    const auto alg = algebra(r, {"x^3"});
    const std::vector<FreeVector> cols{vec(r, {"x^2"})};
    const ArtinianModule m = module_model(alg, 1, cols);
    const auto gens = coords(*alg, {"1"});
    CHECK(colon_module(m, gens).dim() == 0);
  }

  TEST_CASE("cusp: colon of m^2 by m has dimension 2 above m^2") {
    const auto ring = cusp();
    const auto alg = quotient_algebra(maximal_ideal(ring), 1);
    const ArtinianModule m = ArtinianModule::regular(alg);
    const auto gens = alg->maximal_ideal_generators();
    CHECK(colon_module(m, gens).dim() == 2);
  }

  TEST_CASE("annihilators") {
    const auto r = poly_ring(kQ, {"x"});
    const auto alg3 = algebra(r, {"x^3"});
    CHECK(annihilator(ArtinianModule::regular(alg3)).dim() == 0);

    const std::vector<FreeVector> cols{vec(r, {"x^2"})};
    const ArtinianModule small = module_model(alg3, 1, cols);
    const Subspace ann = annihilator(small);
    CHECK(ann.dim() == 1);
    CHECK(ann.contains(coords(*alg3, {"x^2"})[0]));

    const auto alg2 = algebra(r, {"x^2"});
    const ArtinianModule free = module_model(alg2, 1, {});
    const std::vector<Vector> xg{free.coordinates(vec(r, {"x"}))};
    const Subspace n = submodule_span(free, xg);
    const Subspace c = colon_into_ring(free, n);
    CHECK(c.dim() == 1);
    CHECK(c.contains(coords(*alg2, {"x"})[0]));
  }

  TEST_CASE("faithfulness") {
    const auto r = poly_ring(kQ, {"x"});
    const auto alg = algebra(r, {"x^2"});
    CHECK(is_faithful(ArtinianModule::regular(alg)));
    const std::vector<FreeVector> cols{vec(r, {"x"})};
    CHECK_FALSE(is_faithful(module_model(alg, 1, cols)));
  }

  TEST_CASE("M = maximal ideal of the cusp modulo m^2 M is faithful") {
    // Valuations: R/m^2 = {0, 2, 3} and M/m^2 M = {2, 3, 4, 5}; t^2 and t^3
    // both move t^2 to a surviving valuation, so nothing nonzero kills M.
    const auto ring = cusp(kF2);
    const auto module = PresentedModule::from_ideal(
        ring, polys(ring->ambient(), {"x1", "x2"}));
    const QuotientModel q = artinian_quotient(module, maximal_ideal(ring), 1);
    CHECK(q.module->dim() == 4);
    CHECK(q.host->dim() == 3);
    CHECK(is_faithful(*q.module));
    // Enumerate every host element and test r * g = 0 for all generators.
    std::size_t killers = 0;
    const std::size_t total = std::size_t{1} << q.host->dim();
    for (std::size_t code = 0; code < total; ++code) {
      Vector r(q.host->dim(), Scalar::zero(kF2));
      for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = Scalar::from_int(kF2, (code >> i) & 1);
      }
      bool kills = true;
      for (const auto& g : q.module->generators()) {
        kills &= is_zero(q.module->act(r, g));
      }
      killers += kills ? 1 : 0;
    }
    CHECK(killers == 1);
  }
}

TEST_SUITE("artinian properties") {
  TEST_CASE("property: actions commute and respect the host relations") {
    for (const auto& q : fuzz_models(901, 40)) {
      const auto& acts = q.module->actions();
      for (std::size_t i = 0; i < acts.size(); ++i) {
        for (std::size_t j = i + 1; j < acts.size(); ++j) {
          CHECK(acts[i] * acts[j] == acts[j] * acts[i]);
        }
      }
      // Every defining relation of the host acts as zero.
      for (const auto& rel : q.host->defining().polynomials()) {
        const Vector v = q.host->coordinates(rel);
        CHECK(is_zero(v));
      }
      for (std::size_t b = 0; b < q.host->dim(); ++b) {
        const Vector e = unit_vector(q.host->field(), q.host->dim(), b);
        const Matrix m = q.module->action_of(e);
        for (std::size_t c = 0; c < q.host->dim(); ++c) {
          const Vector f = unit_vector(q.host->field(), q.host->dim(), c);
          CHECK(m * q.module->action_of(f) ==
                q.module->action_of(q.host->multiply(e, f)));
        }
      }
    }
  }

  TEST_CASE("property: nonzero modules have a nonzero socle") {
    for (const auto& q : fuzz_models(902, 60)) {
      REQUIRE(q.module->dim() > 0);
      CHECK(socle(*q.module).dim() >= 1);
    }
  }

  TEST_CASE("property: colon by the maximal ideal equals the socle") {
    for (const auto& q : fuzz_models(903, 60)) {
      const auto gens = q.host->maximal_ideal_generators();
      CHECK(colon_module(*q.module, gens) == socle(*q.module));
    }
  }

  TEST_CASE("property: length is additive on submodules") {
    Gen g(904);
    for (const auto& q : fuzz_models(905, 40)) {
      const ArtinianModule& m = *q.module;
      std::vector<Vector> picks;
      for (int k = 0; k < 2; ++k) {
        Vector v(m.dim(), Scalar::zero(m.field()));
        for (auto& c : v) c = g.scalar(m.field());
        picks.push_back(v);
      }
      const Subspace n = submodule_span(m, picks);
      std::vector<FreeVector> extra;
      for (const auto& v : picks) extra.push_back(m.lift(v));
      const ArtinianModule quotient = module_model(
          q.host, m.rank(), m.relations().vectors(), extra);
      CHECK(n.dim() + length(quotient) == length(m));
    }
  }

  TEST_CASE("property: annihilator is an ideal and faithful means zero") {
    for (const auto& q : fuzz_models(906, 40)) {
      const Subspace ann = annihilator(*q.module);
      CHECK(is_faithful(*q.module) == (ann.dim() == 0));
      CHECK(ideal_span(*q.host, ann.basis()) == ann);
    }
  }
}
