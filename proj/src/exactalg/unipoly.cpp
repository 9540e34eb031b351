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

#include "higgs/unipoly.hpp"

#include <sstream>

#include "higgs/errors.hpp"

namespace higgs {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int degree) {
  if (c == 0) return {};
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::variable() { return monomial(1, 1); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& UniPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroInput, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly r = *this;
  Rat inv = 1 / leading();
  return r *= inv;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

UniPoly& UniPoly::operator*=(const Rat& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

std::strong_ordering canonical_compare(const UniPoly& a, const UniPoly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = 0; i <= a.degree(); ++i) {
    const Rat& x = a.coeffs()[static_cast<std::size_t>(i)];
    const Rat& y = b.coeffs()[static_cast<std::size_t>(i)];
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rat inv = 1 / b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rat c = rem[static_cast<std::size_t>(i)] * inv;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw Error(ErrorKind::InternalAssumption, "inexact division of " + to_string(a) + " by " + to_string(b));
  }
  return q;
}

bool divides(const UniPoly& b, const UniPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).remainder.is_zero();
}

UniPoly pow(const UniPoly& p, unsigned n) {
  UniPoly result = UniPoly::constant(1);
  UniPoly base = p;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  Rat inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "squarefree part of zero");
  return exact_div(f, gcd(f, f.derivative())).monic();
}

std::vector<Factor> squarefree_decompose(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "squarefree decomposition of zero");
  std::vector<Factor> out;
  if (f.degree() == 0) return out;
  UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = exact_div(f, a);
  UniPoly c = exact_div(fp, a);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g.monic(), i});
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

int root_multiplicity(const UniPoly& f, const Rat& root) {
  if (f.is_zero()) throw Error(ErrorKind::InfiniteOrder, "root multiplicity in the zero polynomial");
  const UniPoly lin{-root, Rat(1)};
  int m = 0;
  UniPoly g = f;
  while (true) {
    auto [q, r] = divmod(g, lin);
    if (!r.is_zero()) break;
    g = std::move(q);
    ++m;
  }
  return m;
}

std::string to_string(const UniPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || c != 1) {
      os << format_rat(c);
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size()) throw Error(ErrorKind::Shape, "interpolation needs matching point and value counts");
  std::vector<Rat> dd = ys;
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      if (xs[i] == xs[i - j]) throw Error(ErrorKind::InvalidPoint, "repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    }
  }
  UniPoly p;
  for (std::size_t i = n; i-- > 0;) p = p * UniPoly{-xs[i], 1} + UniPoly::constant(dd[i]);
  return p;
}

}  // namespace higgs
