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

#include "higgs/covers.hpp"

#include <numeric>

#include "higgs/errors.hpp"

namespace higgs {

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  order_ = 1;
  for (int n : factors_) {
    if (n < 2) throw Error(ErrorKind::InvalidAlgebra, "cyclic factor orders must be >= 2");
    order_ *= n;
  }
}

std::vector<int> AbelianGroup::residues(int index) const {
  std::vector<int> r;
  for (int n : factors_) {
    r.push_back(index % n);
    index /= n;
  }
  return r;
}

int AbelianGroup::index(const std::vector<int>& residues) const {
  int idx = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) idx = idx * factors_[i] + residues[i];
  return idx;
}

int AbelianGroup::add(int a, int b) const {
  auto ra = residues(a), rb = residues(b);
  for (std::size_t i = 0; i < ra.size(); ++i) ra[i] = (ra[i] + rb[i]) % factors_[i];
  return index(ra);
}

int AbelianGroup::negate(int a) const {
  auto ra = residues(a);
  for (std::size_t i = 0; i < ra.size(); ++i) ra[i] = (factors_[i] - ra[i]) % factors_[i];
  return index(ra);
}

CoverAlgebra::CoverAlgebra(AbelianGroup group, std::vector<int> twist_degrees, std::vector<BinForm> structure_forms)
    : group_(std::move(group)), twist_(std::move(twist_degrees)), forms_(std::move(structure_forms)) {
  const auto n = static_cast<std::size_t>(group_.order());
  if (twist_.size() != n) throw Error(ErrorKind::InvalidAlgebra, "need one twist degree per character");
  if (forms_.size() != n * n) throw Error(ErrorKind::InvalidAlgebra, "need order^2 structure forms");
}

std::optional<int> CoverAlgebra::standard_cyclic_order() const {
  if (group_.factors().size() > 1) return std::nullopt;
  if (*this == *make_standard_cyclic(order())) return order();
  return std::nullopt;
}

CoverPtr make_standard_cyclic(int r) {
  if (r < 1) throw Error(ErrorKind::InvalidAlgebra, "cover degree must be >= 1");
  AbelianGroup group(r == 1 ? std::vector<int>{} : std::vector<int>{r});
  std::vector<int> twist(static_cast<std::size_t>(r), 1);
  twist[0] = 0;
  const BinForm s = BinForm::monomial(1, 1), t = BinForm::monomial(1, 0);
  std::vector<BinForm> forms;
  forms.reserve(static_cast<std::size_t>(r * r));
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      if (a == 0 || b == 0) {
        forms.push_back(BinForm::constant(1));
      } else if (a + b < r) {
        forms.push_back(t);
      } else if (a + b > r) {
        forms.push_back(s);
      } else {
        forms.push_back(s * t);
      }
    }
  }
  return std::make_shared<const CoverAlgebra>(std::move(group), std::move(twist), std::move(forms));
}

CoverPtr make_cyclic_triple(int l1, int l2, const BinForm& a, const BinForm& b) {
  if (a.degree() != 2 * l1 - l2 || b.degree() != 2 * l2 - l1) {
    throw Error(ErrorKind::DegreeMismatch, "cyclic triple data needs deg a = 2 l1 - l2 and deg b = 2 l2 - l1");
  }
  const BinForm one = BinForm::constant(1);
  std::vector<BinForm> forms{one, one, one, one, a, a * b, one, a * b, b};
  return std::make_shared<const CoverAlgebra>(AbelianGroup({3}), std::vector<int>{0, l1, l2}, std::move(forms));
}

ValidationReport validate_algebra(const CoverAlgebra& alg) {
  ValidationReport rep;
  const int n = alg.order();
  const auto& g = alg.group();
  auto fail = [&](const std::string& msg) {
    rep.valid = false;
    rep.violation = msg;
    return rep;
  };
  if (alg.twist(0) != 0) return fail("l_triv = " + std::to_string(alg.twist(0)) + " != 0");
  for (int a = 0; a < n; ++a) {
    if (alg.twist(a) < 0) return fail("negative twist degree l_" + std::to_string(a));
  }
  for (int a = 0; a < n; ++a) {
    if (!(alg.form(0, a) == BinForm::constant(1))) {
      return fail("unit: c_{0," + std::to_string(a) + "} = " + to_string(alg.form(0, a)) + " != 1");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int expected = alg.twist(a) + alg.twist(b) - alg.twist(g.add(a, b));
      if (alg.form(a, b).degree() != expected) {
        return fail("degree: c_{" + std::to_string(a) + "," + std::to_string(b) + "} has degree " +
                    std::to_string(alg.form(a, b).degree()) + ", expected " + std::to_string(expected));
      }
      if (!(alg.form(a, b) == alg.form(b, a))) {
        return fail("commutativity: c_{" + std::to_string(a) + "," + std::to_string(b) + "} = " +
                    to_string(alg.form(a, b)) + " but c_{" + std::to_string(b) + "," + std::to_string(a) +
                    "} = " + to_string(alg.form(b, a)));
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const BinForm lhs = alg.form(a, b) * alg.form(g.add(a, b), c);
        const BinForm rhs = alg.form(b, c) * alg.form(a, g.add(b, c));
        if (!(lhs == rhs)) {
          return fail("associativity at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                      "): " + to_string(lhs) + " != " + to_string(rhs));
        }
      }
    }
  }
  if (g.factors() == std::vector<int>{3}) rep.branch_degree = 2 * (alg.twist(1) + alg.twist(2));
  return rep;
}

SectionData::SectionData(CoverPtr cover, int twist_degree, std::map<int, BinForm> components)
    : cover_(std::move(cover)), d_(twist_degree) {
  if (!cover_) throw Error(ErrorKind::InvalidAlgebra, "section without a cover");
  if (d_ < 0) throw Error(ErrorKind::DegreeMismatch, "twist degree must be non-negative");
  for (auto& [rho, form] : components) {
    if (rho < 0 || rho >= cover_->order()) {
      throw Error(ErrorKind::DegreeMismatch, "component index " + std::to_string(rho) + " out of range");
    }
    if (form.is_zero()) continue;
    if (form.degree() != required_degree(rho)) {
      throw Error(ErrorKind::DegreeMismatch, "component " + std::to_string(rho) + " has degree " +
                                                 std::to_string(form.degree()) + ", expected " +
                                                 std::to_string(required_degree(rho)));
    }
    components_.emplace(rho, std::move(form));
  }
}

const BinForm* SectionData::component(int rho) const {
  auto it = components_.find(rho);
  return it == components_.end() ? nullptr : &it->second;
}

SectionData operator+(const SectionData& a, const SectionData& b) {
  if (!(*a.cover_ == *b.cover_) || a.d_ != b.d_) throw Error(ErrorKind::DegreeMismatch, "adding incompatible sections");
  std::map<int, BinForm> sum = a.components_;
  for (const auto& [rho, f] : b.components_) {
    auto it = sum.find(rho);
    if (it == sum.end()) {
      sum.emplace(rho, f);
    } else {
      it->second = it->second + f;
    }
  }
  return SectionData(a.cover_, a.d_, std::move(sum));
}

bool operator==(const SectionData& a, const SectionData& b) {
  return *a.cover_ == *b.cover_ && a.d_ == b.d_ && a.components_ == b.components_;
}

SectionData decompose_section(int r, int d, const BinForm& sigma) {
  if (r < 1) throw Error(ErrorKind::InvalidAlgebra, "cover degree must be >= 1");
  if (d < 0 || sigma.degree() != r * d) {
    throw Error(ErrorKind::DegreeMismatch, "section of degree " + std::to_string(sigma.degree()) +
                                               " does not match r*d = " + std::to_string(r * d));
  }
  auto cover = make_standard_cyclic(r);
  std::map<int, BinForm> comps;
  for (int a = 0; a <= sigma.degree(); ++a) {
    const Rat& c = sigma.coeff(a);
    if (c == 0) continue;
    const int k = a % r;
    const int j = a / r;
    const int deg = k == 0 ? d : d - 1;
    auto it = comps.find(k);
    if (it == comps.end()) it = comps.emplace(k, BinForm::zero(deg)).first;
    it->second = it->second + BinForm::monomial(deg, j, c);
  }
  return SectionData(std::move(cover), d, std::move(comps));
}

BinForm expand_section(const SectionData& sec) {
  const auto r = sec.cover().standard_cyclic_order();
  if (!r) throw Error(ErrorKind::Unsupported, "re-expansion needs a standard cyclic cover");
  const int d = sec.twist_degree();
  BinForm sigma = BinForm::zero(*r * d);
  for (const auto& [k, h] : sec.components()) {
    for (int j = 0; j <= h.degree(); ++j) sigma = sigma + BinForm::monomial(*r * d, k + *r * j, h.coeff(j));
  }
  return sigma;
}

PolyMatrix mult_matrix(const SectionData& sec, Chart chart) {
  const CoverAlgebra& alg = sec.cover();
  const int n = alg.order();
  PolyMatrix a(n, n);
  for (const auto& [rho, h] : sec.components()) {
    for (int col = 0; col < n; ++col) {
      const int row = alg.group().add(rho, col);
      a(row, col) += (h * alg.form(rho, col)).dehomogenize(chart);
    }
  }
  return a;
}

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

}  // namespace

SplitBundle pushforward_line_bundle(int r, int m) {
  if (r < 1) throw Error(ErrorKind::InvalidAlgebra, "cover degree must be >= 1");
  SplitBundle b;
  for (int k = 0; k < r; ++k) b.degrees.push_back(floor_div(m - k, r));
  int chi = 0;
  for (int deg : b.degrees) chi += deg + 1;
  if (chi != m + 1) throw Error(ErrorKind::InternalAssumption, "Euler characteristic not conserved by pushforward");
  return b;
}

bool is_pullback(const SectionData& sec) {
  for (const auto& [rho, h] : sec.components()) {
    if (rho != 0 && !h.is_zero()) return false;
  }
  return true;
}

int subcover_index(const SectionData& sec) {
  const auto r = sec.cover().standard_cyclic_order();
  if (!r) throw Error(ErrorKind::Unsupported, "subcover index needs a standard cyclic cover");
  int g = *r;
  for (const auto& [k, h] : sec.components()) {
    if (k != 0) g = std::gcd(g, k);
  }
  return g;
}

}  // namespace higgs
