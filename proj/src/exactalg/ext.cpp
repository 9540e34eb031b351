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

#include "higgs/ext.hpp"

#include "higgs/errors.hpp"

namespace higgs {

ExtElem::ExtElem(UniPoly modulus, const UniPoly& value) : modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1 || modulus_.leading() != 1) {
    throw Error(ErrorKind::InvalidPoint, "extension modulus must be monic of degree >= 1, got " + to_string(modulus_));
  }
  value_ = divmod(value, modulus_).remainder;
}

namespace {

void check_same(const ExtElem& a, const ExtElem& b) {
  if (!(a.modulus() == b.modulus())) {
    throw Error(ErrorKind::ModulusMismatch, to_string(a.modulus()) + " vs " + to_string(b.modulus()));
  }
}

}  // namespace

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
  check_same(a, b);
  return ExtElem(a.modulus_, a.value_ + b.value_);
}

ExtElem operator-(const ExtElem& a, const ExtElem& b) {
  check_same(a, b);
  return ExtElem(a.modulus_, a.value_ - b.value_);
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
  check_same(a, b);
  return ExtElem(a.modulus_, a.value_ * b.value_);
}

ExtElem ExtElem::inverse() const {
  const ExtGcd eg = ext_gcd(value_, modulus_);
  if (value_.is_zero() || eg.g.degree() != 0) {
    throw Error(ErrorKind::NotInvertible, to_string(value_) + " shares a factor with " + to_string(modulus_));
  }
  return ExtElem(modulus_, eg.s);
}

ExtElem ext_reduce(const ExtElem& x, const ExtElem& y, ExtOp op) {
  switch (op) {
    case ExtOp::Add: return x + y;
    case ExtOp::Mul: return x * y;
    case ExtOp::Inv: return x.inverse();
  }
  throw Error(ErrorKind::Unsupported, "unknown extension operation");
}

ExtElem ext_eval(const UniPoly& p, const UniPoly& modulus) { return ExtElem(modulus, p); }

std::string to_string(const ExtElem& e) {
  return to_string(e.value()) + " mod (" + to_string(e.modulus()) + ")";
}

}  // namespace higgs
