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

#include <optional>
#include <string>

#include "higgs/covers.hpp"
#include "higgs/spectral.hpp"

namespace higgs {

enum class CoverVerdict { Nilpotent, Scalar, Birational, Factors };

std::string to_string(CoverVerdict v);

/// sigma = p^* tau for X -> Y of degree g followed by the standard cyclic
/// cover Y -> P^1 of degree r' = r / g.
struct FactorizationReport {
  int subcover_index = 1;
  int quotient_degree = 1;
  SectionData tau;
  CoverVerdict verdict = CoverVerdict::Birational;
};

/// Standard cyclic covers only; verifies the re-expansion and char = min^g.
FactorizationReport intermediate_factorization(const SectionData& sec);

struct SpectralPointValue {
  ProjPoint base;
  Rat eta;
};

/// (pi(x), sigma(x)) with the base normalized and eta rescaled to match.
SpectralPointValue eval_spectral_point(const SectionData& sec, const ProjPoint& x);

/// Exact evaluation of f at a point of Tot(O(d)).
bool on_curve(const SpectralPoly& f, const SpectralPointValue& p);

struct BirationalityVerdict {
  CoverVerdict verdict = CoverVerdict::Birational;
  std::string justification;
  std::optional<FactorizationReport> factorization;
  /// For g = 1: some sampled unramified fiber had r distinct eta values.
  /// False means sampling failed, not that the verdict is wrong.
  bool fiber_witness = false;
};

BirationalityVerdict birationality_verdict(const SectionData& sec);

}  // namespace higgs
