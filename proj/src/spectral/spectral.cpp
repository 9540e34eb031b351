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

#include "higgs/spectral.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "higgs/errors.hpp"
#include "higgs/factor.hpp"
#include "higgs/matrix.hpp"

namespace higgs {

SpectralPoly::SpectralPoly(int twist_degree, std::vector<BinForm> coeffs) : d_(twist_degree), coeffs_(std::move(coeffs)) {
  const int n = degree();
  for (int k = 0; k <= n; ++k) {
    if (coeff(k).degree() != (n - k) * d_) {
      throw Error(ErrorKind::DegreeMismatch, "eta^" + std::to_string(k) + " coefficient must have degree " +
                                                 std::to_string((n - k) * d_));
    }
  }
}

SpectralPoly SpectralPoly::homogenize(const EtaPoly& p, int twist_degree, Chart chart) {
  const int n = p.degree();
  std::vector<BinForm> coeffs;
  for (int k = 0; k <= n; ++k) coeffs.push_back(BinForm::homogenize(p.coeff(k), (n - k) * twist_degree, chart));
  return SpectralPoly(twist_degree, std::move(coeffs));
}

EtaPoly SpectralPoly::dehomogenize(Chart chart) const {
  std::vector<UniPoly> c;
  for (const auto& f : coeffs_) c.push_back(f.dehomogenize(chart));
  return EtaPoly(std::move(c));
}

std::string to_string(const SpectralPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BinForm& c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == BinForm::constant(1);
    if (!unit || k == 0) os << "(" << to_string(c) << ")";
    if (k > 0) os << (unit ? "" : "*") << "eta" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return first ? "0" : os.str();
}

SpectralPoly CharData::poly() const {
  std::vector<BinForm> c(static_cast<std::size_t>(r + 1));
  c[static_cast<std::size_t>(r)] = BinForm::constant(1);
  for (int i = 1; i <= r; ++i) c[static_cast<std::size_t>(r - i)] = coefficients[static_cast<std::size_t>(i - 1)];
  return SpectralPoly(d, std::move(c));
}

std::pair<CharData, SpectralPoly> char_and_annihilating(const SectionData& sec) {
  const int d = sec.twist_degree();
  SpectralPoly chr[2], ann[2];
  for (Chart ch : {Chart::T, Chart::S}) {
    const PolyMatrix a = mult_matrix(sec, ch);
    const EtaPoly chi = char_poly_matrix(a);
    const auto i = static_cast<std::size_t>(ch);
    chr[i] = SpectralPoly::homogenize(chi, d, ch);
    ann[i] = SpectralPoly::homogenize(min_poly_matrix(a, chi), d, ch);
  }
  if (!(chr[0] == chr[1])) throw Error(ErrorKind::InternalAssumption, "characteristic polynomial differs between charts");
  if (!(ann[0] == ann[1])) throw Error(ErrorKind::InternalAssumption, "annihilating polynomial differs between charts");
  CharData cd;
  cd.r = sec.rank();
  cd.d = d;
  for (int i = 1; i <= cd.r; ++i) {
    const BinForm& c = chr[0].coeff(cd.r - i);
    cd.coefficients.push_back(c);
    cd.elementary.push_back(i % 2 == 0 ? c : -c);
  }
  return {std::move(cd), std::move(ann[0])};
}

CharData invariant_sections(const SectionData& sec) {
  const int d = sec.twist_degree();
  const SpectralPoly t = SpectralPoly::homogenize(char_poly_matrix(mult_matrix(sec, Chart::T)), d, Chart::T);
  const SpectralPoly s = SpectralPoly::homogenize(char_poly_matrix(mult_matrix(sec, Chart::S)), d, Chart::S);
  if (!(t == s)) throw Error(ErrorKind::InternalAssumption, "characteristic polynomial differs between charts");
  CharData cd;
  cd.r = sec.rank();
  cd.d = d;
  for (int i = 1; i <= cd.r; ++i) {
    const BinForm& c = t.coeff(cd.r - i);
    cd.coefficients.push_back(c);
    cd.elementary.push_back(i % 2 == 0 ? c : -c);
  }
  return cd;
}

SpectralPoly annihilating_poly(const SectionData& sec) { return char_and_annihilating(sec).second; }

SpectralCurve spectral_curve(const SectionData& sec) {
  SpectralCurve c;
  std::tie(c.chars, c.annihilating) = char_and_annihilating(sec);
  c.subcover_index = c.chars.r / c.annihilating.degree();
  // Over a standard cyclic cover the image of the irreducible X is the
  // reduced spectral curve, so g = 1 certifies integrality; the polynomial
  // root search is an independent sanity witness.
  if (c.subcover_index == 1 && sec.cover().standard_cyclic_order()) {
    const auto roots = c.chars.r > 1 ? polynomial_eta_roots(c.annihilating.dehomogenize(), c.chars.d, 1000)
                                     : std::optional<std::vector<UniPoly>>{};
    const bool has_root = roots && !roots->empty();
    if (has_root) throw Error(ErrorKind::InternalAssumption, "squarefree spectral curve has a section component");
    c.integral = Integrality::Certified;
  }
  return c;
}

BinForm discriminant_eta(const SpectralPoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorKind::DegreeMismatch, "discriminant needs eta-degree >= 1");
  const int deg = n * (n - 1) * f.twist_degree();
  auto in_chart = [&](Chart ch) {
    const EtaPoly p = f.dehomogenize(ch);
    return BinForm::homogenize(resultant(p, p.derivative_eta()), deg, ch);
  };
  const BinForm t = in_chart(Chart::T);
  if (!(t == in_chart(Chart::S))) throw Error(ErrorKind::InternalAssumption, "discriminant differs between charts");
  return t;
}

BinForm discriminant_eta(const SpectralCurve& curve) { return discriminant_eta(curve.annihilating); }

BinForm cubic_delta(const BinForm& a, const BinForm& b) {
  if (3 * a.degree() != 2 * b.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "cubic discriminant needs a in O(2e), b in O(3e)");
  }
  return Rat(4) * pow(a, 3) + Rat(27) * pow(b, 2);
}

std::string to_string(SingularityCertificate c) {
  switch (c) {
    case SingularityCertificate::Jacobian: return "jacobian";
    case SingularityCertificate::CubicCaseA: return "cubic-case-a";
    case SingularityCertificate::CubicCaseB: return "cubic-case-b";
    case SingularityCertificate::DoubleCover: return "double-cover";
  }
  return "?";
}

int SingularPoint::geometric_count() const {
  return locus.degree() * (static_cast<int>(eta_equation.size()) - 1);
}

std::string to_string(const SingularPoint& p) {
  const std::string var = p.chart == Chart::T ? "w" : "v";
  std::ostringstream os;
  if (p.point) {
    os << p.point->to_string();
  } else {
    os << to_string(p.locus, var) << " = 0";
  }
  if (p.eta) {
    os << ", eta = " << to_string(*p.eta);
  } else {
    os << ", eta^" << p.eta_equation.size() - 1 << " + ... over Q[" << var << "]/(" << to_string(p.locus, var) << ")";
  }
  os << " [" << to_string(p.certificate) << "]";
  return os.str();
}

namespace {

// Polynomials in eta over K = Q[w]/(p), ascending.
using KPoly = std::vector<ExtElem>;

void trim(KPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly reduce(const EtaPoly& f, const UniPoly& modulus) {
  KPoly out;
  for (const auto& c : f.coeffs()) out.push_back(ext_eval(c, modulus));
  trim(out);
  return out;
}

KPoly kmonic(const KPoly& a) {
  const ExtElem inv = a.back().inverse();
  KPoly out;
  for (const auto& c : a) out.push_back(c * inv);
  return out;
}

KPoly kmod(KPoly a, const KPoly& b) {
  const ExtElem inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const ExtElem q = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

KPoly kgcd(KPoly a, KPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    KPoly r = kmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : kmonic(a);
}

KPoly kderiv(const KPoly& a) {
  KPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(ExtElem::rational(a[i].modulus(), Rat(static_cast<long>(i))) * a[i]);
  trim(out);
  return out;
}

KPoly kdiv(KPoly a, const KPoly& b) {
  const ExtElem inv = b.back().inverse();
  KPoly q(a.size() - b.size() + 1, ExtElem::rational(b.back().modulus(), 0));
  while (a.size() >= b.size()) {
    const ExtElem c = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
    a.pop_back();
  }
  return q;
}

int sort_key_cmp(const SingularPoint& a, const SingularPoint& b) {
  if (a.chart != b.chart) return a.chart < b.chart ? -1 : 1;
  const auto c = canonical_compare(a.locus, b.locus);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

void sort_points(std::vector<SingularPoint>& pts) {
  std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return sort_key_cmp(a, b) < 0; });
}

std::optional<ProjPoint> point_of(Chart chart, const UniPoly& locus) {
  if (locus.degree() != 1) return std::nullopt;
  const Rat root = -locus.coeff(0);
  return chart == Chart::T ? ProjPoint(root, 1) : ProjPoint(1, root);
}

// Singular eta values of F over the closed point locus = 0, if any.
std::optional<SingularPoint> certify(const EtaPoly& f, Chart chart, const UniPoly& locus) {
  const KPoly g = kgcd(kgcd(reduce(f, locus), reduce(f.derivative_eta(), locus)), reduce(f.derivative_w(), locus));
  if (g.size() <= 1) return std::nullopt;
  const KPoly sf = kdiv(g, kgcd(g, kderiv(g)));
  SingularPoint p;
  p.chart = chart;
  p.locus = locus;
  p.point = point_of(chart, locus);
  p.eta_equation = kmonic(sf);
  if (p.eta_equation.size() == 2) p.eta = -p.eta_equation[0];
  return p;
}

void cubic_cross_check(const EtaPoly& f, SingularPoint* found, const UniPoly& locus) {
  const UniPoly shift = f.coeff(2) * Rat(-1, 3);
  const EtaPoly dep = f.shift_eta(shift);
  const TripleTest t = triple_singularity_test(dep, locus);
  if (!found) {
    if (t.kind != TripleCase::Smooth) throw Error(ErrorKind::InternalAssumption, "cubic test disagrees with the Jacobian");
    return;
  }
  if (t.kind == TripleCase::Smooth || !found->eta || !(*found->eta == *t.eta + ext_eval(shift, locus))) {
    throw Error(ErrorKind::InternalAssumption, "cubic test disagrees with the Jacobian");
  }
  found->certificate = t.kind == TripleCase::CaseA ? SingularityCertificate::CubicCaseA : SingularityCertificate::CubicCaseB;
}

}  // namespace

bool same_points(const std::vector<SingularPoint>& a, const std::vector<SingularPoint>& b) {
  if (a.size() != b.size()) return false;
  auto x = a, y = b;
  sort_points(x);
  sort_points(y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].chart != y[i].chart || !(x[i].locus == y[i].locus) || !(x[i].eta_equation == y[i].eta_equation)) return false;
  }
  return true;
}

std::vector<SingularPoint> singular_locus(const SpectralPoly& f) {
  if (f.degree() < 1) throw Error(ErrorKind::DegreeMismatch, "spectral curve needs eta-degree >= 1");
  std::vector<SingularPoint> out;
  for (Chart chart : {Chart::T, Chart::S}) {
    const EtaPoly p = f.dehomogenize(chart);
    const UniPoly disc = resultant(p, p.derivative_eta());
    if (disc.is_zero()) throw Error(ErrorKind::NonReducedCurve, "curve is not reduced; use the annihilating polynomial");
    std::vector<UniPoly> candidates;
    if (chart == Chart::T) {
      for (const auto& [q, m] : factor_rational(disc)) {
        if (m >= 2) candidates.push_back(q);
      }
    } else if (root_multiplicity(disc, 0) >= 2) {
      candidates.push_back(UniPoly::variable());  // only [1:0] is new in this chart
    }
    for (const auto& q : candidates) {
      auto pt = certify(p, chart, q);
      if (f.degree() == 3) cubic_cross_check(p, pt ? &*pt : nullptr, q);
      if (pt) out.push_back(std::move(*pt));
    }
  }
  sort_points(out);
  return out;
}

std::vector<SingularPoint> singular_locus(const SpectralCurve& curve) {
  bool zero = true;
  for (const auto& e : curve.chars.elementary) zero = zero && e.is_zero();
  if (zero && curve.chars.r > 0) {
    throw Error(ErrorKind::NonReducedCurve, "zero Higgs field: the spectral scheme is the non-reduced zero section");
  }
  return singular_locus(curve.annihilating);
}

TripleTest triple_singularity_test(const UniPoly& a, const UniPoly& b, const UniPoly& locus) {
  if (locus.degree() < 1 || locus.leading() != 1) throw Error(ErrorKind::InvalidPoint, "locus must be monic of degree >= 1");
  const UniPoly p2 = locus * locus;
  TripleTest t;
  if (divides(locus, a)) {
    if (divides(p2, b)) {
      t.kind = TripleCase::CaseA;
      t.eta = ExtElem::rational(locus, 0);
    }
    return t;
  }
  const UniPoly delta = Rat(4) * pow(a, 3) + Rat(27) * pow(b, 2);
  if (divides(p2, delta)) {
    t.kind = TripleCase::CaseB;
    t.eta = ExtElem::rational(locus, Rat(-3, 2)) * ext_eval(b, locus) * ext_eval(a, locus).inverse();
  }
  return t;
}

TripleTest triple_singularity_test(const EtaPoly& cubic, const UniPoly& locus) {
  if (cubic.degree() != 3 || !(cubic.coeff(3) == UniPoly::constant(1))) {
    throw Error(ErrorKind::NotDepressed, "expected a monic cubic in eta");
  }
  if (!cubic.coeff(2).is_zero()) throw Error(ErrorKind::NotDepressed, "cubic has an eta^2 term; complete the cube first");
  return triple_singularity_test(cubic.coeff(1), cubic.coeff(0), locus);
}

std::vector<SingularPoint> double_cover_singularities(const BinForm& f, const BinForm& g, const BinForm& branch) {
  if (g.is_zero()) throw Error(ErrorKind::PullbackSection, "g = 0: the section is a pullback");
  if (branch.degree() + 2 * g.degree() != 2 * f.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "need deg branch + 2 deg g = 2 deg f");
  }
  const UniPoly bt = branch.dehomogenize();
  const bool squarefree = !branch.is_zero() && squarefree_part(bt).degree() == bt.degree() &&
                          branch.degree() - bt.degree() <= 1;
  if (!squarefree) throw Error(ErrorKind::InvalidAlgebra, "branch form must be squarefree");

  std::vector<SingularPoint> out;
  auto add = [&](Chart chart, const UniPoly& locus, const ExtElem& eta) {
    SingularPoint p;
    p.chart = chart;
    p.locus = locus;
    p.point = point_of(chart, locus);
    p.eta_equation = {-eta, ExtElem::rational(locus, 1)};
    p.eta = eta;
    p.certificate = SingularityCertificate::DoubleCover;
    out.push_back(std::move(p));
  };
  const UniPoly gt = g.dehomogenize();
  if (gt.degree() > 0) {
    for (const auto& [q, m] : factor_rational(gt)) add(Chart::T, q, ext_eval(f.dehomogenize(), q));
  }
  if (g.coeff(g.degree()) == 0) {
    const UniPoly v = UniPoly::variable();
    add(Chart::S, v, ExtElem::rational(v, f.coeff(f.degree())));
  }
  sort_points(out);
  return out;
}

int arithmetic_genus(int r, int d) { return r * (r - 1) * d / 2 - r + 1; }

std::optional<std::vector<UniPoly>> polynomial_eta_roots(const EtaPoly& p, int max_degree, int max_candidates) {
  if (p.degree() < 1) return std::vector<UniPoly>{};
  const EtaPoly f = squarefree_part_eta(p);
  // Pick w0 where the fiber is unramified and lift each rational eta root
  // as a power series in u = w - w0.
  Rat w0 = 0;
  UniPoly fiber;
  for (int tries = 0;; ++tries) {
    if (tries >= max_candidates) return std::nullopt;
    fiber = f.eval_w(w0);
    if (fiber.degree() == f.degree() && gcd(fiber, fiber.derivative()).degree() == 0) break;
    w0 += 1;
  }
  std::vector<UniPoly> coeffs;
  for (const auto& c : f.coeffs()) coeffs.push_back(c.compose(UniPoly{w0, 1}));
  const EtaPoly shifted(std::move(coeffs));
  const UniPoly dfiber = fiber.derivative();

  std::vector<UniPoly> roots;
  for (const Rat& c0 : rational_roots(fiber)) {
    UniPoly lam = UniPoly::constant(c0);
    const Rat inv = 1 / dfiber.eval(c0);
    for (int j = 1; j <= max_degree; ++j) {
      const Rat cj = -shifted.substitute_eta(lam).coeff(j) * inv;
      lam = lam + UniPoly::monomial(cj, j);
    }
    const UniPoly in_w = lam.compose(UniPoly{-w0, 1});
    if (p.substitute_eta(in_w).is_zero()) roots.push_back(in_w);
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return canonical_compare(a, b) < 0; });
  return roots;
}

}  // namespace higgs
