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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace higgs {

/// Exact rationals and integers. mpq_class keeps values canonical
/// (gcd(num, den) = 1, den > 0) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p" or "p/q" decimal text; the result is canonicalized.
Rat parse_rat(std::string_view text);

/// Canonical text: "p" when the denominator is 1, otherwise "p/q".
std::string format_rat(const Rat& value);

}  // namespace higgs
