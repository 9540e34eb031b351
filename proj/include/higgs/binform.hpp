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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "higgs/rational.hpp"
#include "higgs/unipoly.hpp"

namespace higgs {

/// Affine chart of the projective line. Chart::T is t != 0 with coordinate
/// w = s/t; Chart::S is s != 0 with coordinate v = t/s.
enum class Chart { T = 0, S = 1 };

/// Point [s:t] of the projective line with coprime integer coordinates and
/// first nonzero coordinate positive.
class ProjPoint {
 public:
  ProjPoint(const Rat& s, const Rat& t);
  const Int& s() const { return s_; }
  const Int& t() const { return t_; }
  /// Normalization factor: the input (s, t) equals scale() * (s(), t()).
  const Rat& scale() const { return scale_; }
  std::string to_string() const;
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.s_ == b.s_ && a.t_ == b.t_; }

 private:
  Int s_;
  Int t_;
  Rat scale_;
};

/// Homogeneous binary form of a fixed nominal degree. Coefficient i belongs
/// to s^i t^(degree - i). The zero form keeps its nominal degree.
class BinForm {
 public:
  BinForm() = default;
  BinForm(int degree, std::vector<Rat> coeffs);

  static BinForm zero(int degree);
  static BinForm constant(const Rat& c) { return BinForm(0, {c}); }
  static BinForm monomial(int degree, int s_exponent, const Rat& c = 1);
  /// Homogenizes an affine polynomial in the given chart; throws
  /// HomogenizationOverflow when its degree exceeds `degree`.
  static BinForm homogenize(const UniPoly& p, int degree, Chart chart = Chart::T);

  int degree() const { return degree_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  UniPoly dehomogenize(Chart chart = Chart::T) const;
  Rat eval(const Rat& s, const Rat& t) const;
  /// F(s^k, t^k), a form of degree k * degree.
  BinForm inflate(int k) const;

  BinForm operator-() const;
  friend BinForm operator+(const BinForm& a, const BinForm& b);
  friend BinForm operator-(const BinForm& a, const BinForm& b);
  friend BinForm operator*(const BinForm& a, const BinForm& b);
  friend BinForm operator*(const Rat& c, const BinForm& a);
  friend bool operator==(const BinForm& a, const BinForm& b) = default;

 private:
  int degree_ = 0;
  std::vector<Rat> coeffs_{Rat(0)};
};

BinForm pow(const BinForm& f, unsigned n);

/// Multiplicity of the linear form (p1 s - p0 t) in F for P = [p0:p1].
int vanishing_order(const BinForm& form, const ProjPoint& point);
int vanishing_order(const BinForm& form, const Rat& p0, const Rat& p1);

/// Prints in the variables s, t (or x, y when `xy` is set).
std::string to_string(const BinForm& f, bool xy = false);

}  // namespace higgs
