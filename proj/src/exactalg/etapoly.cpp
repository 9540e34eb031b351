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

#include "higgs/etapoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "higgs/errors.hpp"

namespace higgs {

EtaPoly::EtaPoly(std::vector<UniPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

EtaPoly EtaPoly::monomial(const UniPoly& c, int k) {
  if (c.is_zero()) return {};
  std::vector<UniPoly> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return EtaPoly(std::move(v));
}

void EtaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly EtaPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

const UniPoly& EtaPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroInput, "leading coefficient of the zero eta-polynomial");
  return coeffs_.back();
}

int EtaPoly::w_degree() const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

EtaPoly EtaPoly::derivative_eta() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<UniPoly> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Rat(static_cast<long>(k));
  return EtaPoly(std::move(v));
}

EtaPoly EtaPoly::derivative_w() const {
  std::vector<UniPoly> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.derivative());
  return EtaPoly(std::move(v));
}

UniPoly EtaPoly::eval_w(const Rat& x) const {
  std::vector<Rat> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.eval(x));
  return UniPoly(std::move(v));
}

UniPoly EtaPoly::substitute_eta(const UniPoly& lambda) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= lambda;
    acc += *it;
  }
  return acc;
}

EtaPoly EtaPoly::shift_eta(const UniPoly& shift) const {
  const EtaPoly lin(std::vector<UniPoly>{shift, UniPoly::constant(1)});
  EtaPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += EtaPoly(*it);
  }
  return acc;
}

EtaPoly EtaPoly::operator-() const {
  EtaPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

EtaPoly& EtaPoly::operator+=(const EtaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

EtaPoly& EtaPoly::operator-=(const EtaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

EtaPoly operator*(const EtaPoly& a, const EtaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return EtaPoly(std::move(v));
}

EtaPoly operator*(const UniPoly& a, const EtaPoly& b) {
  std::vector<UniPoly> v;
  v.reserve(b.coeffs_.size());
  for (const auto& c : b.coeffs_) v.push_back(a * c);
  return EtaPoly(std::move(v));
}

EtaPoly pow(const EtaPoly& p, unsigned n) {
  EtaPoly result = EtaPoly::constant(1);
  EtaPoly base = p;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

EtaPoly exact_div(const EtaPoly& a, const EtaPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "division by the zero eta-polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) {
    throw Error(ErrorKind::InternalAssumption, "inexact eta-division (degree)");
  }
  std::vector<UniPoly> rem = a.coeffs();
  std::vector<UniPoly> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const UniPoly& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    UniPoly q = exact_div(top, b.leading());
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(i - db)] = std::move(q);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) throw Error(ErrorKind::InternalAssumption, "inexact eta-division (remainder)");
  }
  return EtaPoly(std::move(quo));
}

namespace {

UniPoly content(const EtaPoly& p) {
  UniPoly g;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

EtaPoly primitive(const EtaPoly& p) {
  if (p.is_zero()) return p;
  const UniPoly c = content(p);
  std::vector<UniPoly> v;
  for (const auto& x : p.coeffs()) v.push_back(exact_div(x, c));
  return EtaPoly(std::move(v));
}

/// lc(b)^(deg a - deg b + 1) * a mod b.
EtaPoly pseudo_remainder(const EtaPoly& a, const EtaPoly& b) {
  std::vector<UniPoly> rem = a.coeffs();
  const int db = b.degree();
  const UniPoly& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    UniPoly top = rem[static_cast<std::size_t>(i)];
    for (auto& r : rem) r *= lb;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
    rem.pop_back();
  }
  return EtaPoly(std::move(rem));
}

}  // namespace

EtaPoly gcd_eta(const EtaPoly& a, const EtaPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  const UniPoly cont = gcd(content(a), content(b));
  EtaPoly x = primitive(a);
  EtaPoly y = primitive(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    EtaPoly r = primitive(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  EtaPoly g = cont * x;
  const Rat lc = g.leading().leading();
  return UniPoly::constant(1 / lc) * g;
}

namespace {

// Squarefree part of a polynomial monic in eta by specializing w, taking
// univariate squarefree parts and interpolating the coefficients. Roots grow
// at most like w^mu with mu = max_i deg(f_{n-i}) / i, so a monic divisor has
// coefficient degrees <= n mu, which fixes the number of nodes; the result is verified by exact division, so a run of unlucky
// nodes only costs the fallback.
std::optional<EtaPoly> squarefree_part_interpolated(const EtaPoly& f) {
  const int n = f.degree();
  Rat mu = 0;
  for (int i = 1; i <= n; ++i) mu = std::max(mu, Rat(std::max(f.coeff(n - i).degree(), 0), i));
  const Rat nmu = n * mu;
  const int bound = static_cast<int>(mpz_class(nmu.get_num() / nmu.get_den()).get_si());
  int k = -1;
  std::vector<Rat> xs;
  std::vector<UniPoly> vals;
  for (int i = 0; static_cast<int>(xs.size()) <= bound; ++i) {
    if (i > 4 * bound + 64) return std::nullopt;
    const Rat x = i % 2 == 0 ? Rat(i / 2) : Rat(-(i + 1) / 2);
    const UniPoly q = f.eval_w(x);
    const UniPoly sf = exact_div(q, gcd(q, q.derivative())).monic();
    if (sf.degree() < k) continue;
    if (sf.degree() > k) {
      k = sf.degree();
      xs.clear();
      vals.clear();
    }
    xs.push_back(x);
    vals.push_back(sf);
  }
  std::vector<UniPoly> coeffs;
  for (int j = 0; j <= k; ++j) {
    std::vector<Rat> ys;
    for (const auto& v : vals) ys.push_back(v.coeff(j));
    coeffs.push_back(interpolate(xs, ys));
  }
  EtaPoly m(std::move(coeffs));
  try {
    exact_div(f, m);
  } catch (const Error&) {
    return std::nullopt;
  }
  return m;
}

}  // namespace

EtaPoly squarefree_part_eta(const EtaPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "squarefree part of zero");
  if (f.leading().degree() == 0 && f.degree() > 0) {
    const EtaPoly monic = UniPoly::constant(1 / f.leading().leading()) * f;
    if (auto m = squarefree_part_interpolated(monic)) return *m;
  }
  const EtaPoly g = gcd_eta(f, f.derivative_eta());
  EtaPoly q = exact_div(f, g);
  const Rat lc = q.leading().leading();
  return UniPoly::constant(1 / lc) * q;
}

std::string to_string(const EtaPoly& p, const std::string& w, const std::string& eta) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const UniPoly& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == UniPoly::constant(1);
    if (!unit || k == 0) os << "(" << to_string(c, w) << ")";
    if (k > 0) {
      os << (unit ? "" : "*") << eta;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace higgs
