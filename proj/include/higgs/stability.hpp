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
#include <vector>

#include "higgs/covers.hpp"
#include "higgs/unipoly.hpp"

namespace higgs {

/// Normalized Hilbert polynomial slope * k + constant on the projective line.
struct HilbertPoly {
  Rat slope;
  Rat constant;
  friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;
};

std::string to_string(const HilbertPoly& p);

/// (1/n) sum_i (h k + a_i + 1) for the split bundle sum O(a_i).
HilbertPoly hilbert_poly(const SplitBundle& bundle, int ample_degree = 1);

/// p < q (strict) or p <= q for k >> 0.
bool precedes(const HilbertPoly& p, const HilbertPoly& q, bool strict);

struct RelationCheck {
  bool holds = false;
  HilbertPoly lhs;  // rk + m + 1
  HilbertPoly rhs;  // r * p(pi_* O(m)), not normalized
};

/// The Hilbert polynomial of O(m) on X against pi^*O(1) equals r times the
/// normalized polynomial of pi_* O(m).
RelationCheck pushforward_relation_check(int r, int m);

/// pi_* M for M = sum O(a_i): the concatenated pushforward degrees.
SplitBundle pushforward_bundle(int r, const SplitBundle& m);

enum class SubsheafKind { Block, Eigen };

/// Phi-invariant subsheaf of pi_* M. Blocks are pi_* of sub-sums of M;
/// eigen-lines are saturations of polynomial kernel vectors of Phi - lambda
/// inside one summand pi_* O(a_i), written in the frame u^k of the w-chart.
struct SubsheafRecord {
  SubsheafKind kind = SubsheafKind::Block;
  std::vector<int> summands;    // block index set, or the single host summand
  std::optional<UniPoly> lambda;
  std::vector<UniPoly> kernel;  // primitive, entries indexed by u^k
  SplitBundle bundle;
  HilbertPoly hilbert;

  int rank() const { return bundle.rank(); }
  std::string description() const;
};

struct SubsheafSearch {
  std::vector<SubsheafRecord> records;
  SplitBundle total;
  HilbertPoly total_hilbert;
  /// False when no unramified rational base point was found for eigen-lines.
  bool complete = true;
};

SubsheafSearch invariant_subsheaf_search(const SplitBundle& m, const SectionData& sec, int ample_degree = 1);

enum class StabilityStatus { Stable, StrictlySemistable, Unstable, Undetermined };
enum class StabilityMethod { PropDoubleCover, PropStability, DirectSearch };

std::string to_string(StabilityStatus s);
std::string to_string(StabilityMethod m);

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::Undetermined;
  std::optional<SubsheafRecord> witness;
  StabilityMethod method = StabilityMethod::DirectSearch;
  HilbertPoly total;
  std::vector<std::string> reasons;
};

StabilityVerdict gieseker_verdict(const SplitBundle& m, const SectionData& sec, int ample_degree = 1);

/// Verdict for degree-2 covers read off M alone. Throws PullbackSection when h_1 = 0.
StabilityVerdict double_cover_verdict(const SplitBundle& m, const SectionData& sec, int ample_degree = 1);

}  // namespace higgs
