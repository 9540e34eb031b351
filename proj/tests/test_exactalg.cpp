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
#include "higgs/binform.hpp"
#include "higgs/errors.hpp"
#include "higgs/etapoly.hpp"
#include "higgs/ext.hpp"
#include "higgs/matrix.hpp"
#include "test_support.hpp"

using namespace higgs;
using higgs::testing::cst;
using higgs::testing::Gen;
using higgs::testing::leibniz_det;
using higgs::testing::w;

namespace {

EtaPoly eta_poly(std::vector<UniPoly> c) { return EtaPoly(std::move(c)); }

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(format_rat(parse_rat("-6/4")) == "-3/2");
  CHECK(format_rat(parse_rat("10/5")) == "2");
  CHECK(format_rat(parse_rat("+7")) == "7");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("1.5"), Error);
  CHECK_THROWS_AS(parse_rat("3/-4"), Error);
}

TEST_CASE("univariate arithmetic") {
  const UniPoly p{1, 2, 1};  // (w + 1)^2
  CHECK(p.degree() == 2);
  CHECK(UniPoly{0, 0}.is_zero());
  CHECK(p == pow(UniPoly{1, 1}, 2));
  CHECK(exact_div(p, UniPoly{1, 1}) == UniPoly{1, 1});
  CHECK_THROWS_AS(exact_div(p, UniPoly{2, 1}), Error);
  CHECK(gcd(p, UniPoly{-1, 0, 1}) == UniPoly{1, 1});
  CHECK(p.eval(2) == 9);
  CHECK(p.compose(UniPoly{-1, 1}) == UniPoly{0, 0, 1});
  CHECK(to_string(UniPoly{-1, 0, Rat(1, 2)}) == "1/2*w^2 - 1");

  Gen gen(11);
  for (int i = 0; i < 30; ++i) {
    const UniPoly a = gen.poly(5), b = gen.poly_exact(3);
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    const ExtGcd eg = ext_gcd(a, b);
    CHECK(eg.s * a + eg.t * b == eg.g);
  }
}

TEST_CASE("resultant examples") {
  SUBCASE("Res(eta^2 + c, 2 eta) = 4c") {
    const UniPoly c{3, 1};
    const EtaPoly f = eta_poly({c, {}, cst(1)});
    const EtaPoly g = eta_poly({{}, cst(2)});
    // Hand-expanded 3x3 Sylvester determinant: rows [1 0 c], [2 0 0], [0 2 0].
    CHECK(resultant(f, g) == Rat(4) * c);
    CHECK(leibniz_det(sylvester_matrix<UniPoly>(f.coeffs(), g.coeffs())) == Rat(4) * c);
  }
  SUBCASE("Res(f, 1) = 1") {
    const EtaPoly f = eta_poly({w(), cst(1), cst(5)});
    CHECK(resultant(f, EtaPoly::constant(1)) == cst(1));
  }
  SUBCASE("eliminating u from u^2 - w and eta - u") {
    std::vector<EtaPoly> f{EtaPoly(-w()), EtaPoly(), EtaPoly::constant(1)};
    std::vector<EtaPoly> g{EtaPoly::eta(), EtaPoly::constant(-1)};
    const EtaPoly expected = eta_poly({-w(), {}, cst(1)});
    CHECK(sylvester_resultant<EtaPoly>(f, g) == expected);
  }
  SUBCASE("both zero is undefined") {
    CHECK_THROWS_AS(resultant(EtaPoly(), EtaPoly()), Error);
  }
}

TEST_CASE("resultant properties on random inputs") {
  Gen gen(2024);
  for (int iter = 0; iter < 25; ++iter) {
    auto rnd = [&](int deg) {
      std::vector<UniPoly> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = gen.poly(2, 3);
      c.back() = gen.poly_exact(gen.integer(0, 2), 3);
      return EtaPoly(std::move(c));
    };
    const EtaPoly f = rnd(gen.integer(0, 6));
    const EtaPoly g = rnd(gen.integer(0, 4));
    const EtaPoly h = rnd(gen.integer(0, 2));
    const int sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
    CHECK(resultant(f, g) == Rat(sign) * resultant(g, f));
    CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
  }
}

TEST_CASE("squarefree decomposition") {
  // w^2 (w + 1)
  auto sq = squarefree_decompose(UniPoly{0, 0, 1, 1});
  REQUIRE(sq.size() == 2);
  CHECK(sq[0] == Factor{UniPoly{1, 1}, 1});
  CHECK(sq[1] == Factor{UniPoly{0, 1}, 2});

  sq = squarefree_decompose(UniPoly{1, 0, 1});
  REQUIRE(sq.size() == 1);
  CHECK(sq[0] == Factor{UniPoly{1, 0, 1}, 1});

  // 27 s^2 t^2 (t f^3 - s g^3)^2 with f = g = 1, at t = 1: 27 w^2 (1 - w)^2.
  const BinForm s = BinForm::monomial(1, 1), t = BinForm::monomial(1, 0);
  const BinForm delta = Rat(27) * pow(s, 2) * pow(t, 2) * pow(t - s, 2);
  sq = squarefree_decompose(delta.dehomogenize());
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].multiplicity == 2);
  CHECK(sq[0].factor == UniPoly{0, -1, 1});  // w (w - 1)

  CHECK_THROWS_AS(squarefree_decompose(UniPoly{}), Error);

  Gen gen(7);
  for (int i = 0; i < 30; ++i) {
    const UniPoly f = gen.poly_exact(1, 3) * pow(gen.poly_exact(2, 3), 2) * pow(gen.poly_exact(1, 3), 3) * cst(gen.nonzero_rat());
    const auto parts = squarefree_decompose(f);
    UniPoly prod = cst(1);
    for (const auto& [fac, m] : parts) {
      CHECK(fac.leading() == 1);
      CHECK(gcd(fac, fac.derivative()).degree() == 0);
      prod *= pow(fac, static_cast<unsigned>(m));
    }
    CHECK(prod == f.monic());
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = a + 1; b < parts.size(); ++b) CHECK(gcd(parts[a].factor, parts[b].factor).degree() == 0);
    }
  }
}

TEST_CASE("characteristic polynomials") {
  Gen gen(99);
  SUBCASE("conic matrix") {
    const UniPoly f = gen.poly_exact(2);
    const PolyMatrix a(2, 2, {UniPoly{}, w() * f, f, UniPoly{}});
    const EtaPoly expected = eta_poly({-(w() * f * f), {}, cst(1)});
    CHECK(char_poly_matrix(a) == expected);
  }
  SUBCASE("identity") {
    for (int r = 1; r <= 8; ++r) {
      const EtaPoly expected = pow(eta_poly({cst(-1), cst(1)}), static_cast<unsigned>(r));
      CHECK(char_poly_matrix(PolyMatrix::identity(r)) == expected);
    }
  }
  SUBCASE("triple cover matrix") {
    const UniPoly f = gen.poly_exact(1), g = gen.poly_exact(2);
    const PolyMatrix a(3, 3, {UniPoly{}, w() * g, w() * f, f, UniPoly{}, w() * g, g, f, UniPoly{}});
    const EtaPoly expected =
        eta_poly({-(w() * pow(f, 3) + w() * w() * pow(g, 3)), Rat(-3) * w() * f * g, UniPoly{}, cst(1)});
    CHECK(char_poly_matrix(a) == expected);
  }
  SUBCASE("non-square input") {
    CHECK_THROWS_AS(char_poly_matrix(PolyMatrix(2, 3)), Error);
  }
  SUBCASE("cofactor and Bareiss agree with Leibniz") {
    for (int n = 1; n <= 6; ++n) {
      PolyMatrix a(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = gen.integer(0, 2) ? gen.poly(2, 3) : UniPoly{};
      }
      const EtaPoly c = char_poly_matrix(a, DetMethod::Cofactor);
      CHECK(c == char_poly_matrix(a, DetMethod::Bareiss));
      CHECK(c.degree() == n);
      CHECK(c.leading() == cst(1));
      CHECK(det_cofactor(a) == leibniz_det(a));
      CHECK(det_bareiss(a) == leibniz_det(a));
    }
  }
  SUBCASE("block diagonal multiplicativity") {
    for (int iter = 0; iter < 5; ++iter) {
      const int n1 = gen.integer(1, 3), n2 = gen.integer(1, 4);
      PolyMatrix a(n1, n1), b(n2, n2), ab(n1 + n2, n1 + n2);
      for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j) ab(i, j) = a(i, j) = gen.poly(2, 3);
      }
      for (int i = 0; i < n2; ++i) {
        for (int j = 0; j < n2; ++j) ab(n1 + i, n1 + j) = b(i, j) = gen.poly(2, 3);
      }
      CHECK(char_poly_matrix(ab) == char_poly_matrix(a) * char_poly_matrix(b));
    }
  }
}

TEST_CASE("minimal polynomials") {
  Gen gen(5);
  const UniPoly h0 = gen.poly_exact(2);
  PolyMatrix scalar = PolyMatrix::identity(4);
  for (int i = 0; i < 4; ++i) scalar(i, i) = h0;
  CHECK(min_poly_matrix(scalar) == eta_poly({-h0, cst(1)}));

  const UniPoly f = gen.poly_exact(1), g = gen.poly_exact(1);
  const PolyMatrix triple(3, 3, {UniPoly{}, w() * g, w() * f, f, UniPoly{}, w() * g, g, f, UniPoly{}});
  const EtaPoly chi = char_poly_matrix(triple);
  CHECK(gcd_eta(chi, chi.derivative_eta()).degree() == 0);
  CHECK(min_poly_matrix(triple) == chi);
  CHECK(evaluate_at_matrix(chi, triple).is_zero());

  // Nilpotent Jordan block is not semisimple: the squarefree part fails to annihilate.
  const PolyMatrix jordan(2, 2, {UniPoly{}, cst(1), UniPoly{}, UniPoly{}});
  CHECK_THROWS_AS(min_poly_matrix(jordan), Error);
}

TEST_CASE("vanishing orders") {
  const BinForm s = BinForm::monomial(1, 1), t = BinForm::monomial(1, 0);
  CHECK(vanishing_order(s * t * t, ProjPoint(1, 0)) == 2);
  CHECK(vanishing_order(s * t * pow(s - t, 2), ProjPoint(1, 1)) == 2);
  CHECK(vanishing_order(s + t, ProjPoint(1, 1)) == 0);
  CHECK(vanishing_order(s * t * t, ProjPoint(0, 1)) == 1);
  CHECK_THROWS_AS(vanishing_order(BinForm::zero(3), ProjPoint(1, 1)), Error);
  CHECK_THROWS_AS(ProjPoint(0, 0), Error);
  CHECK_THROWS_AS(vanishing_order(s, Rat(0), Rat(0)), Error);

  Gen gen(3);
  for (int i = 0; i < 30; ++i) {
    const BinForm f = gen.nonzero_form(gen.integer(0, 4), 2) * pow(s + Rat(2) * t, static_cast<unsigned>(gen.integer(0, 2)));
    const BinForm g = gen.nonzero_form(gen.integer(0, 4), 2) * pow(s, static_cast<unsigned>(gen.integer(0, 2)));
    for (const auto& p : {ProjPoint(-2, 1), ProjPoint(0, 1), ProjPoint(1, 0), ProjPoint(1, 1)}) {
      CHECK(vanishing_order(f * g, p) == vanishing_order(f, p) + vanishing_order(g, p));
    }
  }
}

TEST_CASE("projective points normalize") {
  const ProjPoint p(Rat(-2, 3), Rat(4, 3));
  CHECK(p.s() == 1);
  CHECK(p.t() == -2);
  CHECK(p.scale() == Rat(-2, 3));
  CHECK(ProjPoint(0, -5) == ProjPoint(0, 1));
}

TEST_CASE("extension arithmetic") {
  const UniPoly m{1, 0, 1};  // w^2 + 1
  const ExtElem x(m, w());
  CHECK(ext_reduce(x, x, ExtOp::Mul) == ExtElem::rational(m, -1));
  CHECK(ext_reduce(x, x, ExtOp::Inv) == ExtElem(m, -w()));
  CHECK(ext_reduce(x, x, ExtOp::Add) == ExtElem(m, Rat(2) * w()));
  const UniPoly lin{-2, 1};
  CHECK(ExtElem(lin, pow(w(), 3)) == ExtElem::rational(lin, 8));
  CHECK_THROWS_AS(ext_reduce(x, ExtElem(lin, w()), ExtOp::Add), Error);
  const UniPoly reducible{-1, 0, 1};
  CHECK_THROWS_AS(ExtElem(reducible, UniPoly{-1, 1}).inverse(), Error);
  CHECK_THROWS_AS(ExtElem(UniPoly{1, 2}, w()), Error);  // not monic
}

TEST_CASE("eta-polynomial gcd and exact division") {
  Gen gen(8);
  for (int i = 0; i < 10; ++i) {
    const EtaPoly a = eta_poly({gen.poly(2), cst(1)});
    const EtaPoly b = eta_poly({gen.poly(2), gen.poly(1), cst(1)});
    const EtaPoly c = eta_poly({gen.poly(1), cst(1)});
    const EtaPoly g = gcd_eta(a * c, b * c);
    CHECK(exact_div(a * c, g) * g == a * c);
    CHECK(g.degree() >= 1);
    CHECK(squarefree_part_eta(a * a * b) .degree() <= a.degree() + b.degree());
  }
}
