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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "higgs/binform.hpp"
#include "higgs/matrix.hpp"

namespace higgs {

/// Finite abelian group Z/n_1 x ... x Z/n_k. Elements (and, through the
/// grading, characters) are indexed in mixed radix with the first factor
/// varying fastest. Roots of unity are never materialized.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  int add(int a, int b) const;
  int negate(int a) const;
  std::vector<int> residues(int index) const;
  int index(const std::vector<int>& residues) const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<int> factors_;
  int order_ = 1;
};

/// Finite abelian cover of the projective line presented as the
/// character-graded algebra pi_* O_X = sum_rho L_rho^{-1} with L_rho = O(l_rho)
/// and multiplication e_rho * e_rho' = c_{rho,rho'} e_{rho rho'}.
class CoverAlgebra {
 public:
  CoverAlgebra(AbelianGroup group, std::vector<int> twist_degrees, std::vector<BinForm> structure_forms);

  const AbelianGroup& group() const { return group_; }
  int order() const { return group_.order(); }
  int twist(int rho) const { return twist_[static_cast<std::size_t>(rho)]; }
  const std::vector<int>& twist_degrees() const { return twist_; }
  const BinForm& form(int a, int b) const { return forms_[static_cast<std::size_t>(a * order() + b)]; }
  const std::vector<BinForm>& structure_forms() const { return forms_; }

  /// r when this is exactly the algebra of [x:y] -> [x^r:y^r].
  std::optional<int> standard_cyclic_order() const;

  friend bool operator==(const CoverAlgebra&, const CoverAlgebra&) = default;

 private:
  AbelianGroup group_;
  std::vector<int> twist_;
  std::vector<BinForm> forms_;
};

using CoverPtr = std::shared_ptr<const CoverAlgebra>;

/// Algebra of the cyclic cover [x:y] -> [x^r:y^r]; e_k corresponds to x^k y^(r-k).
CoverPtr make_standard_cyclic(int r);

/// General cyclic triple cover with e_1^2 = a e_2, e_2^2 = b e_1, e_1 e_2 = ab.
CoverPtr make_cyclic_triple(int l1, int l2, const BinForm& a, const BinForm& b);

struct ValidationReport {
  bool valid = true;
  std::string violation;              // first violated identity, both sides printed
  std::optional<int> branch_degree;   // Z/3 covers: 2 (l_1 + l_2)
};

ValidationReport validate_algebra(const CoverAlgebra& algebra);

/// Decomposition of sigma in H^0(X, pi^* O(d)) into character components
/// h_rho of degree d - l_rho. Zero components are not stored.
class SectionData {
 public:
  SectionData(CoverPtr cover, int twist_degree, std::map<int, BinForm> components);

  const CoverAlgebra& cover() const { return *cover_; }
  const CoverPtr& cover_ptr() const { return cover_; }
  int twist_degree() const { return d_; }
  int rank() const { return cover_->order(); }
  const std::map<int, BinForm>& components() const { return components_; }
  /// nullptr when the component is absent.
  const BinForm* component(int rho) const;
  int required_degree(int rho) const { return d_ - cover_->twist(rho); }

  friend SectionData operator+(const SectionData& a, const SectionData& b);
  friend bool operator==(const SectionData& a, const SectionData& b);

 private:
  CoverPtr cover_;
  int d_;
  std::map<int, BinForm> components_;
};

/// Splits sigma(x, y) of degree r*d by residue class of the x-exponent.
SectionData decompose_section(int r, int d, const BinForm& sigma);

/// sigma(x, y) = pi^* h_0 + sum_k x^k y^(r-k) pi^* h_k for standard cyclic covers.
BinForm expand_section(const SectionData& sec);

/// Matrix of multiplication by sigma in the character basis, in the given chart.
PolyMatrix mult_matrix(const SectionData& sec, Chart chart = Chart::T);

/// Direct sum of line bundles O(d_i) on the projective line.
struct SplitBundle {
  std::vector<int> degrees;
  int rank() const { return static_cast<int>(degrees.size()); }
  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;
};

/// pi_* O(m) for the standard cyclic cover of degree r.
SplitBundle pushforward_line_bundle(int r, int m);

bool is_pullback(const SectionData& sec);

/// gcd of r and the nonzero character indices in the support (r for pullbacks).
/// Standard cyclic covers only.
int subcover_index(const SectionData& sec);

}  // namespace higgs
