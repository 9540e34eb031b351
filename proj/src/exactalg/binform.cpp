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

#include "higgs/binform.hpp"

#include <sstream>

#include "higgs/errors.hpp"

namespace higgs {

ProjPoint::ProjPoint(const Rat& s, const Rat& t) {
  if (s == 0 && t == 0) throw Error(ErrorKind::InvalidPoint, "[0:0] is not a projective point");
  // Clear denominators, then divide by the content.
  Int l = lcm(s.get_den(), t.get_den());
  Int a = s.get_num() * (l / s.get_den());
  Int b = t.get_num() * (l / t.get_den());
  Int g = gcd(a, b);
  a /= g;
  b /= g;
  Rat sc = Rat(g, l);
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    sc = -sc;
  }
  sc.canonicalize();
  s_ = a;
  t_ = b;
  scale_ = sc;
}

std::string ProjPoint::to_string() const { return "[" + s_.get_str() + ":" + t_.get_str() + "]"; }

BinForm::BinForm(int degree, std::vector<Rat> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw Error(ErrorKind::DegreeMismatch, "negative form degree");
  if (coeffs_.size() != static_cast<std::size_t>(degree) + 1) {
    throw Error(ErrorKind::DegreeMismatch, "form of degree " + std::to_string(degree) + " needs " +
                                               std::to_string(degree + 1) + " coefficients, got " +
                                               std::to_string(coeffs_.size()));
  }
}

BinForm BinForm::zero(int degree) { return BinForm(degree, std::vector<Rat>(static_cast<std::size_t>(degree) + 1)); }

BinForm BinForm::monomial(int degree, int s_exponent, const Rat& c) {
  BinForm f = zero(degree);
  f.coeffs_[static_cast<std::size_t>(s_exponent)] = c;
  return f;
}

BinForm BinForm::homogenize(const UniPoly& p, int degree, Chart chart) {
  if (p.degree() > degree) {
    throw Error(ErrorKind::HomogenizationOverflow,
                "affine degree " + std::to_string(p.degree()) + " exceeds form degree " + std::to_string(degree));
  }
  BinForm f = zero(degree);
  for (int i = 0; i <= p.degree(); ++i) {
    const int idx = chart == Chart::T ? i : degree - i;
    f.coeffs_[static_cast<std::size_t>(idx)] = p.coeff(i);
  }
  return f;
}

bool BinForm::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

UniPoly BinForm::dehomogenize(Chart chart) const {
  if (chart == Chart::T) return UniPoly(coeffs_);
  return UniPoly(std::vector<Rat>(coeffs_.rbegin(), coeffs_.rend()));
}

Rat BinForm::eval(const Rat& s, const Rat& t) const {
  Rat acc = 0;
  Rat spow = 1;
  for (int i = 0; i <= degree_; ++i) {
    Rat tpow = 1;
    for (int j = 0; j < degree_ - i; ++j) tpow *= t;
    acc += coeffs_[static_cast<std::size_t>(i)] * spow * tpow;
    spow *= s;
  }
  return acc;
}

BinForm BinForm::inflate(int k) const {
  BinForm f = zero(degree_ * k);
  for (int i = 0; i <= degree_; ++i) f.coeffs_[static_cast<std::size_t>(i * k)] = coeffs_[static_cast<std::size_t>(i)];
  return f;
}

BinForm BinForm::operator-() const {
  BinForm f = *this;
  for (auto& c : f.coeffs_) c = -c;
  return f;
}

BinForm operator+(const BinForm& a, const BinForm& b) {
  if (a.degree_ != b.degree_) {
    throw Error(ErrorKind::DegreeMismatch,
                "adding forms of degrees " + std::to_string(a.degree_) + " and " + std::to_string(b.degree_));
  }
  BinForm f = a;
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) f.coeffs_[i] += b.coeffs_[i];
  return f;
}

BinForm operator-(const BinForm& a, const BinForm& b) { return a + (-b); }

BinForm operator*(const BinForm& a, const BinForm& b) {
  BinForm f = BinForm::zero(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j <= b.degree_; ++j) {
      f.coeffs_[static_cast<std::size_t>(i + j)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return f;
}

BinForm operator*(const Rat& c, const BinForm& a) {
  BinForm f = a;
  for (auto& x : f.coeffs_) x *= c;
  return f;
}

BinForm pow(const BinForm& f, unsigned n) {
  BinForm r = BinForm::constant(1);
  for (unsigned i = 0; i < n; ++i) r = r * f;
  return r;
}

int vanishing_order(const BinForm& form, const Rat& p0, const Rat& p1) {
  if (p0 == 0 && p1 == 0) throw Error(ErrorKind::InvalidPoint, "[0:0] is not a projective point");
  if (form.is_zero()) throw Error(ErrorKind::InfiniteOrder, "the zero form vanishes to infinite order");
  if (p1 == 0) {
    // Point [1:0]: the power of t dividing the form.
    int top = form.degree();
    while (form.coeff(top) == 0) --top;
    return form.degree() - top;
  }
  return root_multiplicity(form.dehomogenize(Chart::T), p0 / p1);
}

int vanishing_order(const BinForm& form, const ProjPoint& point) {
  return vanishing_order(form, Rat(point.s()), Rat(point.t()));
}

std::string to_string(const BinForm& f, bool xy) {
  const char* sv = xy ? "x" : "s";
  const char* tv = xy ? "y" : "t";
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Rat c = f.coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const int j = f.degree() - i;
    bool need_star = false;
    if ((i == 0 && j == 0) || c != 1) {
      os << format_rat(c);
      need_star = true;
    }
    if (i > 0) {
      os << (need_star ? "*" : "") << sv;
      if (i > 1) os << "^" << i;
      need_star = true;
    }
    if (j > 0) {
      os << (need_star ? "*" : "") << tv;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

}  // namespace higgs
