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

#include <vector>

#include "higgs/unipoly.hpp"

namespace higgs {

/// Complete factorization over Q into monic irreducible factors with
/// multiplicities, sorted by canonical_compare. Uses squarefree
/// decomposition followed by Cantor-Zassenhaus modulo a small prime, Hensel
/// lifting and factor recombination.
std::vector<Factor> factor_rational(const UniPoly& f);

/// Distinct rational roots, ascending.
std::vector<Rat> rational_roots(const UniPoly& f);

bool is_irreducible(const UniPoly& f);

}  // namespace higgs
