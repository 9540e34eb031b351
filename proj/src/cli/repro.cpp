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

#include <random>

#include "higgs/errors.hpp"
#include "higgs/jobs.hpp"

namespace higgs::cli {

namespace {

const BinForm S = BinForm::monomial(1, 1);
const BinForm T = BinForm::monomial(1, 0);
const BinForm ONE = BinForm::constant(1);

SectionData cyclic(int r, int d, std::map<int, BinForm> comps) {
  return SectionData(make_standard_cyclic(r), d, std::move(comps));
}

// Portable draws: only the raw engine output is used, never the
// implementation-defined distributions.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rat rat() {
    Rat r(integer(-5, 5), integer(0, 3) == 0 ? integer(1, 4) : 1);
    r.canonicalize();
    return r;
  }
  BinForm form(int degree) {
    std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = rat();
    return BinForm(degree, std::move(c));
  }
  BinForm nonzero_form(int degree) {
    BinForm f = form(degree);
    while (f.is_zero()) f = form(degree);
    return f;
  }

 private:
  std::mt19937_64 rng_;
};

struct Entry {
  json j;
  bool ok = true;

  explicit Entry(const std::string& name) : j{{"name", name}, {"checks", json::object()}} {}
  void check(const std::string& name, bool value) {
    j["checks"][name] = value;
    ok = ok && value;
  }
};

SpectralPoly cubic(int d, const BinForm& c1, const BinForm& c0) {
  return SpectralPoly(d, {c0, c1, BinForm::zero(d), BinForm::constant(1)});
}

// Product of the chart-t loci of `pts` against the squarefree part of F(w, 1),
// plus agreement on whether [1:0] is involved.
bool lies_over_exactly(const std::vector<SingularPoint>& pts, const BinForm& f) {
  UniPoly prod = UniPoly::constant(1);
  bool at_infinity = false;
  for (const auto& p : pts) {
    if (p.chart == Chart::T) {
      prod *= p.locus;
    } else {
      at_infinity = true;
    }
  }
  const UniPoly want = squarefree_part(f.dehomogenize(Chart::T)).monic();
  return prod == want && at_infinity == (f.coeff(f.degree()) == 0);
}

Entry conic() {
  Entry e("conic");
  const BinForm f(2, {3, -2, 1});
  const auto sec = cyclic(2, 3, {{1, f}});
  const CharData cd = invariant_sections(sec);
  e.j["section"] = to_string(expand_section(sec), true);
  e.j["f_phi"] = to_string(cd.poly());
  e.check("f_phi = eta^2 - st f^2", cd.poly() == SpectralPoly(3, {-(S * T * f * f), BinForm::zero(3), ONE}));
  e.check("trace vanishes", cd.elementary[0].is_zero());
  return e;
}

Entry general_double(const std::string& name, int d, const BinForm& f, const BinForm& g) {
  Entry e(name);
  const auto sec = cyclic(2, d, {{0, f}, {1, g}});
  const auto curve = spectral_curve(sec);
  const SpectralPoly fp = curve.chars.poly();
  e.j["section"] = to_string(expand_section(sec), true);
  e.j["f_phi"] = to_string(fp);
  e.check("f_phi = (eta - f)^2 - st g^2", fp == SpectralPoly(d, {f * f - S * T * g * g, Rat(-2) * f, ONE}));
  const auto pts = singular_locus(curve);
  json list = json::array();
  for (const auto& p : pts) list.push_back(to_string(p));
  e.j["singular"] = list;
  e.check("jacobian locus = predictor", same_points(pts, double_cover_singularities(f, g, S * T)));
  bool eta_is_f = true;
  for (const auto& p : pts) {
    if (!p.eta) {
      eta_is_f = false;
      continue;
    }
    const ExtElem want = ext_eval(f.dehomogenize(p.chart), p.locus);
    eta_is_f = eta_is_f && *p.eta == want;
  }
  e.check("eta = f at every singular point", eta_is_f);
  e.check("singular points lie over zeros of g", lies_over_exactly(pts, g));
  return e;
}

Entry triple(const std::string& name, int d, const BinForm& f, const BinForm& g) {
  Entry e(name);
  const auto sec = cyclic(3, d, {{1, f}, {2, g}});
  const auto curve = spectral_curve(sec);
  const SpectralPoly fp = curve.chars.poly();
  e.j["section"] = to_string(expand_section(sec), true);
  e.j["f_phi"] = to_string(fp);
  e.check("f_phi = eta^3 - 3stfg eta - (st^2 f^3 + s^2 t g^3)",
          fp == cubic(d, Rat(-3) * S * T * f * g, -(S * T * T * pow(f, 3) + S * S * T * pow(g, 3))));
  const BinForm branch = T * pow(f, 3) - S * pow(g, 3);
  const BinForm disc = discriminant_eta(curve);
  e.j["discriminant"] = to_string(disc);
  e.check("discriminant = 27 s^2 t^2 (t f^3 - s g^3)^2", disc == Rat(27) * S * S * T * T * pow(branch, 2));
  const auto pts = singular_locus(curve);
  json list = json::array();
  for (const auto& p : pts) list.push_back(to_string(p));
  e.j["singular"] = list;
  e.check("singular points lie exactly over t f^3 - s g^3", lies_over_exactly(pts, branch));
  return e;
}

Entry general_triple() {
  Entry e("general-cyclic-triple");
  const int l1 = 2, l2 = 1, d = 3;
  const BinForm a(3, {1, 0, -2, 1}), b = BinForm::constant(3);
  const BinForm g(1, {1, 1}), h(2, {-1, 0, 2});
  const auto cover = make_cyclic_triple(l1, l2, a, b);
  e.check("algebra is associative and commutative", validate_algebra(*cover).valid);
  const SectionData sec(cover, d, {{1, g}, {2, h}});
  const SpectralPoly ann = annihilating_poly(sec);
  e.j["f_phi"] = to_string(ann);
  e.check("f_phi = eta^3 - 3abgh eta - (a^2 b g^3 + a b^2 h^3)",
          ann == cubic(d, Rat(-3) * a * b * g * h, -(a * a * b * pow(g, 3) + a * b * b * pow(h, 3))));
  const BinForm disc = discriminant_eta(ann);
  e.j["discriminant"] = to_string(disc);
  e.check("discriminant = 27 a^2 b^2 (a g^3 - b h^3)^2", disc == Rat(27) * a * a * b * b * pow(a * pow(g, 3) - b * pow(h, 3), 2));
  return e;
}

Entry degree_four() {
  Entry e("degree-four");
  const BinForm h2 = S + T;
  const auto sec = cyclic(4, 2, {{2, h2}});
  const auto curve = spectral_curve(sec);
  const auto rep = intermediate_factorization(sec);
  e.j["section"] = to_string(expand_section(sec), true);
  e.j["f_phi"] = to_string(curve.chars.poly());
  e.j["annihilating"] = to_string(curve.annihilating);
  e.j["tau"] = to_string(expand_section(rep.tau), true);
  e.check("annihilating polynomial has eta-degree 2", curve.annihilating.degree() == 2);
  e.check("subcover index 2", rep.subcover_index == 2 && curve.subcover_index == 2);
  e.check("tau pulls back to sigma", expand_section(rep.tau).inflate(2) == expand_section(sec));
  e.check("char = min^2", curve.chars.poly() == SpectralPoly(2, {pow(curve.annihilating.coeff(0), 2),
                                                                 Rat(2) * curve.annihilating.coeff(0) * curve.annihilating.coeff(1),
                                                                 Rat(2) * curve.annihilating.coeff(0) +
                                                                     pow(curve.annihilating.coeff(1), 2),
                                                                 Rat(2) * curve.annihilating.coeff(1), ONE}));
  e.check("verdict factors", rep.verdict == CoverVerdict::Factors);
  return e;
}

Entry prime_degree() {
  Entry e("prime-degree");
  json verdicts = json::object();
  bool all = true;
  for (int r : {2, 3, 5, 7}) {
    const auto sec = cyclic(r, 2, {{0, S * S - T * T}, {1, S + Rat(2) * T}});
    const auto v = birationality_verdict(sec);
    verdicts[std::to_string(r)] = to_string(v.verdict);
    all = all && v.verdict == CoverVerdict::Birational && v.fiber_witness;
  }
  e.j["verdicts"] = verdicts;
  e.check("birational with a fiber witness for prime r", all);
  return e;
}

Entry genus_table() {
  Entry e("genus-table");
  json triple = json::array();
  bool formula = true;
  for (int d = 1; d <= 10; ++d) {
    const int g = arithmetic_genus(3, d);
    triple.push_back(g);
    formula = formula && g == 3 * d - 2;
  }
  e.j["triple"] = triple;
  e.check("arithmetic genus of triple covers is 3d - 2", formula);
  json nodes = json::array();
  bool counts = true;
  for (int d = 2; d <= 5; ++d) {
    BinForm g = ONE;
    for (int k = 1; k < d; ++k) g = g * (S - Rat(k) * T);
    int n = 0;
    for (const auto& p : singular_locus(spectral_curve(cyclic(2, d, {{1, g}})))) n += p.geometric_count();
    nodes.push_back(n);
    counts = counts && n == d - 1 && arithmetic_genus(2, d) == d - 1;
  }
  e.j["conic_nodes"] = nodes;
  e.check("conic covers have d - 1 nodes", counts);
  return e;
}

Entry stability_tables() {
  Entry e("stability-tables");
  bool relation = true;
  json push = json::object();
  for (int r = 1; r <= 5; ++r) {
    json row = json::array();
    for (int m = -6; m <= 6; ++m) {
      relation = relation && pushforward_relation_check(r, m).holds;
      row.push_back(pushforward_line_bundle(r, m).degrees);
    }
    push[std::to_string(r)] = row;
  }
  e.j["pushforward"] = push;
  e.check("Hilbert polynomial relation for r <= 5, |m| <= 6", relation);

  const auto sec = cyclic(2, 2, {{1, S + T}});
  json table = json::array();
  bool agree = true;
  for (const std::vector<int>& degs : std::vector<std::vector<int>>{
           {3}, {0, 0}, {0, 1}, {1, 0}, {-1, 1}, {2, 2, 2}, {0, 1, 1}, {-3, 3, 0}}) {
    const SplitBundle m{degs};
    const auto v = gieseker_verdict(m, sec);
    const auto dc = double_cover_verdict(m, sec);
    table.push_back({{"M", degs}, {"verdict", to_string(v.status)}, {"total", to_string(v.total)},
                     {"witness", v.witness ? json(v.witness->description()) : json(nullptr)}});
    agree = agree && v.status == dc.status;
  }
  e.j["conic_verdicts"] = table;
  e.check("double cover criterion agrees with the direct search", agree);
  return e;
}

Entry properties(std::uint64_t seed) {
  Entry e("properties");
  Draw draw(seed);
  int factor_ok = 0, factor_n = 0;
  for (int iter = 0; iter < 30; ++iter, ++factor_n) {
    const int r = draw.integer(1, 6), d = draw.integer(1, 3);
    std::map<int, BinForm> comps;
    for (int k = 0; k < r; ++k) {
      if (draw.integer(0, 1)) comps.emplace(k, draw.nonzero_form(k == 0 ? d : d - 1));
    }
    try {
      const auto sec = cyclic(r, d, comps);
      const auto rep = intermediate_factorization(sec);
      if (invariant_sections(rep.tau).poly() == annihilating_poly(sec)) ++factor_ok;
    } catch (const Error&) {
    }
  }
  int point_ok = 0, point_n = 0;
  for (int iter = 0; iter < 5; ++iter) {
    const int r = draw.integer(2, 5), d = draw.integer(1, 3);
    const auto sec = decompose_section(r, d, draw.form(r * d));
    const SpectralPoly f = invariant_sections(sec).poly();
    for (int k = 0; k < 10; ++k, ++point_n) {
      Rat x0 = draw.rat(), y0 = draw.rat();
      if (x0 == 0 && y0 == 0) y0 = 1;
      if (on_curve(f, eval_spectral_point(sec, ProjPoint(x0, y0)))) ++point_ok;
    }
  }
  int verdict_ok = 0, verdict_n = 0;
  for (int iter = 0; iter < 20; ++iter, ++verdict_n) {
    std::vector<int> degs;
    for (int i = 0, n = draw.integer(1, 3); i < n; ++i) degs.push_back(draw.integer(-3, 3));
    const int d = draw.integer(1, 3);
    const auto sec = cyclic(2, d, {{0, draw.form(d)}, {1, draw.nonzero_form(d - 1)}});
    if (double_cover_verdict(SplitBundle{degs}, sec).status == gieseker_verdict(SplitBundle{degs}, sec).status) {
      ++verdict_ok;
    }
  }
  e.j["seed"] = seed;
  e.j["counts"] = {{"char_is_min_power", {factor_ok, factor_n}},
                   {"points_on_curve", {point_ok, point_n}},
                   {"double_cover_agreement", {verdict_ok, verdict_n}}};
  e.check("char = min^g", factor_ok == factor_n);
  e.check("spectral points lie on the curve", point_ok == point_n);
  e.check("double cover verdicts agree", verdict_ok == verdict_n);
  return e;
}

}  // namespace

ReproOutcome run_repro(std::uint64_t seed) {
  ReproOutcome out;
  json corpus = json::array();
  std::vector<Entry> entries;
  entries.push_back(conic());
  entries.push_back(general_double("general-double", 2, BinForm(2, {1, 0, -1}), BinForm(1, {-2, 1})));
  entries.push_back(general_double("general-double-extension", 3, BinForm(3, {0, 1, 0, 1}), BinForm(2, {-2, 0, 1})));
  entries.push_back(triple("triple-d1", 1, BinForm::constant(1), BinForm::constant(2)));
  entries.push_back(triple("triple-d2", 2, S + T, S - Rat(2) * T));
  entries.push_back(general_triple());
  entries.push_back(degree_four());
  entries.push_back(prime_degree());
  entries.push_back(genus_table());
  entries.push_back(stability_tables());
  entries.push_back(properties(seed));
  json summary = json::array();
  for (auto& e : entries) {
    out.passed = out.passed && e.ok;
    if (!e.ok) out.warnings.push_back("repro check failed: " + e.j["name"].get<std::string>());
    summary.push_back(e.j["name"].get<std::string>() + (e.ok ? ": pass" : ": FAIL"));
    corpus.push_back(std::move(e.j));
  }
  out.results = {{"corpus", corpus}, {"summary", summary}, {"passed", out.passed}};
  return out;
}

}  // namespace higgs::cli
