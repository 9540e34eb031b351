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
#include <vector>

#include "higgs/unipoly.hpp"

namespace higgs {

/// Polynomial in eta with coefficients in Q[w] (ascending powers of eta).
/// This is the bivariate representation used for characteristic polynomials
/// and spectral curves in an affine chart.
class EtaPoly {
 public:
  EtaPoly() = default;
  explicit EtaPoly(std::vector<UniPoly> coeffs);
  explicit EtaPoly(const UniPoly& c) : EtaPoly(std::vector<UniPoly>{c}) {}

  static EtaPoly constant(const Rat& c) { return EtaPoly(UniPoly::constant(c)); }
  /// c(w) * eta^k.
  static EtaPoly monomial(const UniPoly& c, int k);
  static EtaPoly eta() { return monomial(UniPoly::constant(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }
  UniPoly coeff(int k) const;
  const UniPoly& leading() const;
  /// Largest w-degree among the coefficients (-1 for zero).
  int w_degree() const;

  EtaPoly derivative_eta() const;
  EtaPoly derivative_w() const;
  /// Univariate polynomial in eta obtained by setting w = x.
  UniPoly eval_w(const Rat& x) const;
  /// f(w, lambda(w)).
  UniPoly substitute_eta(const UniPoly& lambda) const;
  /// f(w, eta + shift(w)).
  EtaPoly shift_eta(const UniPoly& shift) const;

  EtaPoly operator-() const;
  EtaPoly& operator+=(const EtaPoly& rhs);
  EtaPoly& operator-=(const EtaPoly& rhs);
  friend EtaPoly operator+(EtaPoly a, const EtaPoly& b) { return a += b; }
  friend EtaPoly operator-(EtaPoly a, const EtaPoly& b) { return a -= b; }
  friend EtaPoly operator*(const EtaPoly& a, const EtaPoly& b);
  friend EtaPoly operator*(const UniPoly& a, const EtaPoly& b);
  friend bool operator==(const EtaPoly& a, const EtaPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<UniPoly> coeffs_;
};

EtaPoly pow(const EtaPoly& p, unsigned n);

/// Exact division in Q[w][eta]; throws InternalAssumption if b does not divide a.
EtaPoly exact_div(const EtaPoly& a, const EtaPoly& b);

/// gcd over Q(w)[eta] made primitive in Q[w] and normalized so that its
/// leading eta-coefficient is monic in w.
EtaPoly gcd_eta(const EtaPoly& a, const EtaPoly& b);

/// Squarefree part with respect to eta, for polynomials monic in eta.
EtaPoly squarefree_part_eta(const EtaPoly& f);

std::string to_string(const EtaPoly& p, const std::string& w = "w", const std::string& eta = "eta");

}  // namespace higgs
