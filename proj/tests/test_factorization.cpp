/*
   Copyright 2026 The higgscover Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"
#include "higgs/errors.hpp"
#include "higgs/factorization.hpp"
#include "test_support.hpp"

using namespace higgs;
using higgs::testing::Gen;

namespace {

SectionData cyclic(int r, int d, std::map<int, BinForm> comps) { return SectionData(make_standard_cyclic(r), d, std::move(comps)); }

}  // namespace

TEST_CASE("intermediate factorization examples") {
  Gen gen(11);
  SUBCASE("degree four through a conic") {
    const BinForm h2 = gen.nonzero_form(1);
    const auto rep = intermediate_factorization(cyclic(4, 2, {{2, h2}}));
    CHECK(rep.subcover_index == 2);
    CHECK(rep.quotient_degree == 2);
    CHECK(rep.verdict == CoverVerdict::Factors);
    REQUIRE(rep.tau.component(1));
    CHECK(*rep.tau.component(1) == h2);
  }
  SUBCASE("prime degree is birational") {
    const auto rep = intermediate_factorization(cyclic(5, 1, {{1, BinForm::constant(3)}}));
    CHECK(rep.subcover_index == 1);
    CHECK(rep.verdict == CoverVerdict::Birational);
  }
  SUBCASE("r = 6 with support {2, 4}") {
    const auto sec = cyclic(6, 2, {{2, gen.nonzero_form(1)}, {4, gen.nonzero_form(1)}});
    const auto rep = intermediate_factorization(sec);
    CHECK(rep.subcover_index == 2);
    CHECK(rep.quotient_degree == 3);
    CHECK(annihilating_poly(sec).degree() == 3);
  }
  SUBCASE("pullback and zero") {
    CHECK(intermediate_factorization(cyclic(3, 1, {{0, gen.nonzero_form(1)}})).verdict == CoverVerdict::Scalar);
    const auto zero = intermediate_factorization(cyclic(3, 1, {}));
    CHECK(zero.verdict == CoverVerdict::Nilpotent);
    CHECK(zero.subcover_index == 3);
  }
  SUBCASE("non-cyclic algebras are unsupported") {
    const BinForm a = BinForm::monomial(1, 1), b = BinForm::monomial(1, 0);
    const SectionData sec(make_cyclic_triple(2, 1, BinForm::monomial(3, 1), BinForm::constant(1)), 2,
                          {{1, BinForm::constant(1)}, {2, a + b}});
    CHECK_THROWS_AS(intermediate_factorization(sec), Error);
  }
}

TEST_CASE("char = min^g over all supports") {
  Gen gen(12);
  for (int r = 1; r <= 8; ++r) {
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      const int d = gen.integer(1, 3);
      std::map<int, BinForm> comps;
      for (int k = 0; k < r; ++k) {
        if (mask & (1u << k)) comps.emplace(k, gen.nonzero_form(k == 0 ? d : d - 1));
      }
      const SectionData sec = cyclic(r, d, comps);
      const auto rep = intermediate_factorization(sec);  // throws if the identity fails
      CHECK(r % rep.subcover_index == 0);
      CHECK((rep.subcover_index == r) == is_pullback(sec));
      // Factor then recompute.
      if (rep.subcover_index > 1 || r <= 6) CHECK(invariant_sections(rep.tau).poly() == annihilating_poly(sec));
    }
  }
}

TEST_CASE("spectral points") {
  SUBCASE("conic, sigma = xy at [2:1]") {
    const auto sec = cyclic(2, 1, {{1, BinForm::constant(1)}});
    const auto p = eval_spectral_point(sec, ProjPoint(2, 1));
    CHECK(p.base == ProjPoint(4, 1));
    CHECK(p.eta == 2);
    CHECK(on_curve(invariant_sections(sec).poly(), p));
  }
  SUBCASE("zero section") {
    const auto sec = cyclic(3, 2, {});
    const auto p = eval_spectral_point(sec, ProjPoint(1, 2));
    CHECK(p.eta == 0);
    CHECK(on_curve(invariant_sections(sec).poly(), p));
  }
  SUBCASE("ramification point") {
    const auto sec = cyclic(2, 2, {{1, BinForm::monomial(1, 0) + BinForm::monomial(1, 1)}});
    const auto p = eval_spectral_point(sec, ProjPoint(0, 1));
    CHECK(p.base == ProjPoint(0, 1));
    CHECK(p.eta == 0);
  }
  SUBCASE("random points land on the curve") {
    Gen gen(13);
    for (int iter = 0; iter < 10; ++iter) {
      const int r = gen.integer(2, 5), d = gen.integer(1, 3);
      const auto sec = decompose_section(r, d, gen.form(r * d));
      const SpectralPoly f = invariant_sections(sec).poly();
      const SpectralPoly a = annihilating_poly(sec);
      for (int k = 0; k < 50; ++k) {
        Rat x0 = gen.rat(6), y0 = gen.rat(6);
        if (x0 == 0 && y0 == 0) y0 = 1;
        const auto p = eval_spectral_point(sec, ProjPoint(x0, y0));
        CHECK(on_curve(f, p));
        CHECK(on_curve(a, p));
      }
    }
  }
}

TEST_CASE("birationality verdicts") {
  Gen gen(14);
  for (int r : {2, 3, 5, 7}) {
    const auto sec = cyclic(r, 2, {{0, gen.form(2)}, {1, gen.nonzero_form(1)}});
    const auto v = birationality_verdict(sec);
    CHECK(v.verdict == CoverVerdict::Birational);
    CHECK(v.fiber_witness);
  }
  const auto f4 = birationality_verdict(cyclic(4, 2, {{2, gen.nonzero_form(1)}}));
  CHECK(f4.verdict == CoverVerdict::Factors);
  REQUIRE(f4.factorization);
  CHECK(f4.factorization->quotient_degree == 2);
  CHECK(birationality_verdict(cyclic(4, 2, {{0, gen.nonzero_form(2)}})).verdict == CoverVerdict::Scalar);
  CHECK(birationality_verdict(cyclic(4, 2, {})).verdict == CoverVerdict::Nilpotent);
}
