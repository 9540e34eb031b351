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

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "higgs/rational.hpp"

namespace higgs {

/// Dense univariate polynomial over Q, ascending coefficients, no trailing
/// zeros. The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<Rat> coeffs) : UniPoly(std::vector<Rat>(coeffs)) {}

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, int degree);
  /// The polynomial w.
  static UniPoly variable();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of w^i; zero outside the stored range.
  Rat coeff(int i) const;
  const Rat& leading() const;

  Rat eval(const Rat& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  /// p(q(w)).
  UniPoly compose(const UniPoly& q) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Rat& rhs);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rat& b) { return a *= b; }
  friend UniPoly operator*(const Rat& a, UniPoly b) { return b *= a; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Canonical order: degree first, then coefficients from w^0 upward.
std::strong_ordering canonical_compare(const UniPoly& a, const UniPoly& b);

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Quotient when b divides a; throws InternalAssumption otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& b, const UniPoly& a);
UniPoly pow(const UniPoly& p, unsigned n);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtGcd {
  UniPoly g;  // monic
  UniPoly s;
  UniPoly t;  // s*a + t*b = g
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);

/// Monic squarefree part.
UniPoly squarefree_part(const UniPoly& f);

/// Unique polynomial of degree < xs.size() through the points (Newton form).
UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

struct Factor {
  UniPoly factor;
  int multiplicity;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Yun's algorithm: monic, squarefree, pairwise coprime factors with
/// f = unit * prod factor^multiplicity. Throws ZeroInput on f = 0.
std::vector<Factor> squarefree_decompose(const UniPoly& f);

/// Number of times (w - root) divides f; f must be nonzero.
int root_multiplicity(const UniPoly& f, const Rat& root);

std::string to_string(const UniPoly& p, std::string_view var = "w");

}  // namespace higgs
