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

#include "higgs/stability.hpp"

#include <algorithm>
#include <sstream>

#include "higgs/errors.hpp"
#include "higgs/matrix.hpp"
#include "higgs/spectral.hpp"

namespace higgs {

std::string to_string(const HilbertPoly& p) {
  std::ostringstream os;
  os << format_rat(p.slope) << "k";
  if (p.constant < 0) {
    os << " - " << format_rat(-p.constant);
  } else {
    os << " + " << format_rat(p.constant);
  }
  return os.str();
}

HilbertPoly hilbert_poly(const SplitBundle& bundle, int ample_degree) {
  if (bundle.degrees.empty()) throw Error(ErrorKind::Shape, "Hilbert polynomial of the zero sheaf");
  Rat sum = 0;
  for (int a : bundle.degrees) sum += a + 1;
  return {Rat(ample_degree), sum / bundle.rank()};
}

bool precedes(const HilbertPoly& p, const HilbertPoly& q, bool strict) {
  if (p.slope != q.slope) return p.slope < q.slope;
  return strict ? p.constant < q.constant : p.constant <= q.constant;
}

RelationCheck pushforward_relation_check(int r, int m) {
  RelationCheck c;
  c.lhs = {Rat(r), Rat(m + 1)};
  const HilbertPoly p = hilbert_poly(pushforward_line_bundle(r, m), 1);
  c.rhs = {r * p.slope, r * p.constant};
  c.holds = c.lhs == c.rhs;
  return c;
}

SplitBundle pushforward_bundle(int r, const SplitBundle& m) {
  SplitBundle e;
  for (int a : m.degrees) {
    for (int b : pushforward_line_bundle(r, a).degrees) e.degrees.push_back(b);
  }
  return e;
}

std::string SubsheafRecord::description() const {
  std::ostringstream os;
  if (kind == SubsheafKind::Block) {
    os << "block {";
    for (std::size_t i = 0; i < summands.size(); ++i) os << (i ? ", " : "") << summands[i];
    os << "}";
  } else {
    os << "eigen-line in summand " << summands.front() << " for eta = " << to_string(*lambda) << ", kernel (";
    for (std::size_t i = 0; i < kernel.size(); ++i) os << (i ? ", " : "") << to_string(kernel[i]);
    os << ")";
  }
  return os.str();
}

namespace {

// Element of Q(w) in lowest terms with a monic denominator.
struct RatFunc {
  UniPoly num;
  UniPoly den = UniPoly::constant(1);

  static RatFunc make(const UniPoly& n, const UniPoly& d) {
    if (n.is_zero()) return {};
    const UniPoly g = gcd(n, d);
    UniPoly nn = exact_div(n, g), dd = exact_div(d, g);
    const Rat lc = dd.leading();
    return {nn * (1 / lc), dd * (1 / lc)};
  }
  bool is_zero() const { return num.is_zero(); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return make(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return make(a.num * b.num, a.den * b.den); }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return make(a.num * b.den, a.den * b.num); }
};

// Basis of the kernel of b over Q(w), as primitive polynomial vectors whose
// first nonzero entry has leading coefficient 1.
std::vector<std::vector<UniPoly>> kernel_basis(const PolyMatrix& b) {
  const int n = b.rows(), m = b.cols();
  std::vector<std::vector<RatFunc>> a(static_cast<std::size_t>(n), std::vector<RatFunc>(static_cast<std::size_t>(m)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = RatFunc::make(b(i, j), UniPoly::constant(1));
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int p = row;
    while (p < n && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(row)]);
    auto& pr = a[static_cast<std::size_t>(row)];
    const RatFunc inv = pr[static_cast<std::size_t>(col)];
    for (auto& x : pr) x = x / inv;
    for (int i = 0; i < n; ++i) {
      if (i == row) continue;
      auto& r = a[static_cast<std::size_t>(i)];
      const RatFunc f = r[static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (int j = 0; j < m; ++j) r[static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(j)] - f * pr[static_cast<std::size_t>(j)];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<std::vector<UniPoly>> basis;
  for (int free = 0; free < m; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<RatFunc> v(static_cast<std::size_t>(m));
    v[static_cast<std::size_t>(free)] = RatFunc::make(UniPoly::constant(1), UniPoly::constant(1));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      const RatFunc& e = a[i][static_cast<std::size_t>(free)];
      v[static_cast<std::size_t>(pivot_col[i])] = RatFunc{} - e;
    }
    UniPoly l = UniPoly::constant(1);
    for (const auto& x : v) {
      if (!x.is_zero()) l = exact_div(l * x.den, gcd(l, x.den));
    }
    std::vector<UniPoly> out;
    UniPoly content;
    for (const auto& x : v) {
      out.push_back(x.is_zero() ? UniPoly{} : x.num * exact_div(l, x.den));
      content = gcd(content, out.back());
    }
    Rat lead = 0;
    for (auto& x : out) {
      if (!x.is_zero()) x = exact_div(x, content);
      if (lead == 0 && !x.is_zero()) lead = x.leading();
    }
    for (auto& x : out) x = x * (1 / lead);
    basis.push_back(std::move(out));
  }
  return basis;
}

SubsheafRecord block_record(int r, const SplitBundle& m, std::vector<int> indices, int h) {
  SubsheafRecord rec;
  rec.kind = SubsheafKind::Block;
  for (int i : indices) {
    for (int b : pushforward_line_bundle(r, m.degrees[static_cast<std::size_t>(i)]).degrees) rec.bundle.degrees.push_back(b);
  }
  rec.summands = std::move(indices);
  rec.hilbert = hilbert_poly(rec.bundle, h);
  return rec;
}

bool record_less(const SubsheafRecord& a, const SubsheafRecord& b) {
  if (a.kind != b.kind) return a.kind == SubsheafKind::Block;
  if (a.kind == SubsheafKind::Eigen) {
    const auto c = canonical_compare(*a.lambda, *b.lambda);
    if (c != 0) return c < 0;
  }
  if (a.summands != b.summands) return a.summands < b.summands;
  for (std::size_t i = 0; i < std::min(a.kernel.size(), b.kernel.size()); ++i) {
    const auto c = canonical_compare(a.kernel[i], b.kernel[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

int standard_order(const SectionData& sec) {
  const auto r = sec.cover().standard_cyclic_order();
  if (!r) throw Error(ErrorKind::Unsupported, "stability search needs a standard cyclic cover");
  return *r;
}

}  // namespace

SubsheafSearch invariant_subsheaf_search(const SplitBundle& m, const SectionData& sec, int ample_degree) {
  const int r = standard_order(sec);
  if (m.degrees.empty()) throw Error(ErrorKind::Shape, "M must have positive rank");
  SubsheafSearch out;
  out.total = pushforward_bundle(r, m);
  out.total_hilbert = hilbert_poly(out.total, ample_degree);
  const int nm = m.rank();

  // Phi acts by the same matrix on every pi_* O(a_i), so sub-sums are invariant.
  const PolyMatrix a = mult_matrix(sec);
  for (unsigned mask = 1; mask + 1 < (1u << nm); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < nm; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    PolyMatrix phi(r * nm, r * nm);
    for (int i = 0; i < nm; ++i) {
      for (int p = 0; p < r; ++p) {
        for (int q = 0; q < r; ++q) phi(i * r + p, i * r + q) = a(p, q);
      }
    }
    for (int col = 0; col < r * nm; ++col) {
      if (!(mask & (1u << (col / r)))) continue;
      for (int rw = 0; rw < r * nm; ++rw) {
        if (!(mask & (1u << (rw / r))) && !phi(rw, col).is_zero()) {
          throw Error(ErrorKind::InternalAssumption, "block subsheaf is not invariant");
        }
      }
    }
    out.records.push_back(block_record(r, m, std::move(idx), ample_degree));
  }

  const EtaPoly chi = char_poly_matrix(a);
  const auto roots = polynomial_eta_roots(chi, sec.twist_degree());
  if (!roots) {
    out.complete = false;
  } else {
    for (const UniPoly& lam : *roots) {
      PolyMatrix b = a;
      for (int i = 0; i < r; ++i) b(i, i) -= lam;
      for (const auto& v : kernel_basis(b)) {
        for (int i = 0; i < r; ++i) {
          UniPoly av;
          for (int j = 0; j < r; ++j) av += a(i, j) * v[static_cast<std::size_t>(j)];
          if (!(av == lam * v[static_cast<std::size_t>(i)])) {
            throw Error(ErrorKind::InternalAssumption, "eigen-line kernel vector is not invariant");
          }
        }
        for (int s = 0; s < nm; ++s) {
          const auto bk = pushforward_line_bundle(r, m.degrees[static_cast<std::size_t>(s)]).degrees;
          std::optional<int> e;
          for (int k = 0; k < r; ++k) {
            const UniPoly& vk = v[static_cast<std::size_t>(k)];
            if (vk.is_zero()) continue;
            const int cand = bk[static_cast<std::size_t>(k)] - vk.degree();
            if (!e || cand < *e) e = cand;
          }
          SubsheafRecord rec;
          rec.kind = SubsheafKind::Eigen;
          rec.summands = {s};
          rec.lambda = lam;
          rec.kernel = v;
          rec.bundle.degrees = {*e};
          rec.hilbert = hilbert_poly(rec.bundle, ample_degree);
          out.records.push_back(std::move(rec));
        }
      }
    }
  }
  std::stable_sort(out.records.begin(), out.records.end(), record_less);
  return out;
}

std::string to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::Stable: return "stable";
    case StabilityStatus::StrictlySemistable: return "strictly-semistable";
    case StabilityStatus::Unstable: return "unstable";
    case StabilityStatus::Undetermined: return "undetermined";
  }
  return "?";
}

std::string to_string(StabilityMethod m) {
  switch (m) {
    case StabilityMethod::PropDoubleCover: return "prop-doublecover";
    case StabilityMethod::PropStability: return "prop-stability";
    case StabilityMethod::DirectSearch: return "direct-search";
  }
  return "?";
}

StabilityVerdict gieseker_verdict(const SplitBundle& m, const SectionData& sec, int ample_degree) {
  const SubsheafSearch search = invariant_subsheaf_search(m, sec, ample_degree);
  StabilityVerdict v;
  v.total = search.total_hilbert;
  const SubsheafRecord* best = nullptr;
  for (const auto& rec : search.records) {
    if (!best || precedes(best->hilbert, rec.hilbert, true)) best = &rec;
  }
  if (best && precedes(v.total, best->hilbert, true)) {
    v.status = StabilityStatus::Unstable;
    v.witness = *best;
    return v;
  }
  if (best && best->hilbert == v.total) {
    v.status = StabilityStatus::StrictlySemistable;
    v.witness = *best;
    return v;
  }
  if (!search.complete) {
    v.reasons.push_back("no unramified rational base point among the first candidates; eigen-line search incomplete");
    return v;
  }
  if (spectral_curve(sec).integral != Integrality::Certified) {
    v.reasons.push_back("spectral curve integrality not certified; only block and eigen-line subsheaves were searched");
    return v;
  }
  if (m.rank() != 1) {
    v.reasons.push_back("M has rank > 1 and no block subsheaf decides the verdict");
    return v;
  }
  v.status = StabilityStatus::Stable;
  v.method = StabilityMethod::PropStability;
  return v;
}

StabilityVerdict double_cover_verdict(const SplitBundle& m, const SectionData& sec, int ample_degree) {
  if (sec.cover().standard_cyclic_order() != 2) throw Error(ErrorKind::InvalidAlgebra, "expected the standard double cover");
  if (is_pullback(sec)) throw Error(ErrorKind::PullbackSection, "the double-cover criterion needs h_1 != 0");
  if (m.degrees.empty()) throw Error(ErrorKind::Shape, "M must have positive rank");
  StabilityVerdict v;
  v.method = StabilityMethod::PropDoubleCover;
  v.total = hilbert_poly(pushforward_bundle(2, m), ample_degree);
  const int top = *std::max_element(m.degrees.begin(), m.degrees.end());
  const int bottom = *std::min_element(m.degrees.begin(), m.degrees.end());
  if (m.rank() == 1) {
    v.status = StabilityStatus::Stable;
  } else if (top == bottom) {
    v.status = StabilityStatus::StrictlySemistable;
    v.witness = block_record(2, m, {0}, ample_degree);
  } else {
    v.status = StabilityStatus::Unstable;
    std::vector<int> idx;
    for (int i = 0; i < m.rank(); ++i) {
      if (m.degrees[static_cast<std::size_t>(i)] == top) idx.push_back(i);
    }
    v.witness = block_record(2, m, std::move(idx), ample_degree);
  }
  return v;
}

}  // namespace higgs
