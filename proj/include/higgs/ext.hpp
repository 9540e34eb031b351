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

#include "higgs/unipoly.hpp"

namespace higgs {

/// Element of Q[w]/(modulus) with a monic modulus of degree >= 1, kept reduced.
/// When the modulus is irreducible this is arithmetic at a closed point of
/// the affine chart.
class ExtElem {
 public:
  ExtElem(UniPoly modulus, const UniPoly& value);
  static ExtElem rational(const UniPoly& modulus, const Rat& c) { return ExtElem(modulus, UniPoly::constant(c)); }

  const UniPoly& modulus() const { return modulus_; }
  const UniPoly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  /// True when the value is a constant (always the case for linear moduli).
  bool is_rational() const { return value_.is_constant(); }
  Rat rational_value() const { return value_.coeff(0); }

  ExtElem operator-() const { return ExtElem(modulus_, -value_); }
  friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
  ExtElem inverse() const;
  friend bool operator==(const ExtElem& a, const ExtElem& b) = default;

 private:
  UniPoly modulus_;
  UniPoly value_;
};

enum class ExtOp { Add, Mul, Inv };

/// Reduced result of x op y; y is ignored for Inv. Throws ModulusMismatch or
/// NotInvertible.
ExtElem ext_reduce(const ExtElem& x, const ExtElem& y, ExtOp op);

/// Evaluates a polynomial in w at the class of w.
ExtElem ext_eval(const UniPoly& p, const UniPoly& modulus);

std::string to_string(const ExtElem& e);

}  // namespace higgs
