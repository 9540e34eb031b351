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

#include "higgs/rational.hpp"

#include "higgs/errors.hpp"

namespace higgs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UndefinedResultant: return "undefined-resultant";
    case ErrorKind::ZeroInput: return "zero-input";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::InternalAssumption: return "internal-assumption";
    case ErrorKind::InvalidPoint: return "invalid-point";
    case ErrorKind::InfiniteOrder: return "infinite-order";
    case ErrorKind::ModulusMismatch: return "modulus-mismatch";
    case ErrorKind::NotInvertible: return "not-invertible";
    case ErrorKind::DegreeMismatch: return "degree-mismatch";
    case ErrorKind::HomogenizationOverflow: return "homogenization-overflow";
    case ErrorKind::NonReducedCurve: return "non-reduced-curve";
    case ErrorKind::PullbackSection: return "pullback-section";
    case ErrorKind::NotDepressed: return "not-depressed";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::InvalidAlgebra: return "invalid-algebra";
    case ErrorKind::Schema: return "schema";
  }
  return "unknown";
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::Schema, "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::Schema, "zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& value) { return value.get_str(10); }

}  // namespace higgs
