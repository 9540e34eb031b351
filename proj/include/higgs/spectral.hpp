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
#include <utility>
#include <vector>

#include "higgs/binform.hpp"
#include "higgs/covers.hpp"
#include "higgs/etapoly.hpp"
#include "higgs/ext.hpp"

namespace higgs {

/// Polynomial in the tautological section eta of O(d) whose eta^k
/// coefficient is a form of degree (n - k) d.
class SpectralPoly {
 public:
  SpectralPoly() = default;
  SpectralPoly(int twist_degree, std::vector<BinForm> coeffs);
  /// Homogenizes a chart presentation; throws HomogenizationOverflow.
  static SpectralPoly homogenize(const EtaPoly& p, int twist_degree, Chart chart = Chart::T);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int twist_degree() const { return d_; }
  const std::vector<BinForm>& coeffs() const { return coeffs_; }
  const BinForm& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  EtaPoly dehomogenize(Chart chart = Chart::T) const;

  friend bool operator==(const SpectralPoly&, const SpectralPoly&) = default;

 private:
  int d_ = 0;
  std::vector<BinForm> coeffs_;
};

std::string to_string(const SpectralPoly& p);

/// f = eta^r + sum_i (-1)^i e_i eta^(r-i) = det(eta - Phi).
struct CharData {
  int r = 0;
  int d = 0;
  std::vector<BinForm> elementary;    // e_1 .. e_r, deg e_i = i d
  std::vector<BinForm> coefficients;  // (-1)^i e_i
  SpectralPoly poly() const;
};

enum class Integrality { Certified, NotCertified };

struct SpectralCurve {
  CharData chars;
  SpectralPoly annihilating;
  int subcover_index = 1;
  Integrality integral = Integrality::NotCertified;
};

CharData invariant_sections(const SectionData& sec);
SpectralPoly annihilating_poly(const SectionData& sec);
/// Both of the above from one characteristic polynomial per chart.
std::pair<CharData, SpectralPoly> char_and_annihilating(const SectionData& sec);
SpectralCurve spectral_curve(const SectionData& sec);

/// Res_eta(f, df/deta) of the annihilating polynomial, homogenized to
/// degree n (n - 1) d. For monic depressed cubics this is 4a^3 + 27b^2.
BinForm discriminant_eta(const SpectralPoly& f);
BinForm discriminant_eta(const SpectralCurve& curve);

BinForm cubic_delta(const BinForm& a, const BinForm& b);

enum class SingularityCertificate { Jacobian, CubicCaseA, CubicCaseB, DoubleCover };

std::string to_string(SingularityCertificate c);

/// Singular point(s) of the spectral curve over a closed point of the base.
/// The base is cut out by the monic irreducible `locus` in the chart
/// coordinate; eta values are roots of `eta_equation` over K = Q[w]/(locus),
/// expressed in the fiber coordinate of the same chart.
struct SingularPoint {
  Chart chart = Chart::T;
  UniPoly locus;
  std::optional<ProjPoint> point;   // when the locus is linear
  std::vector<ExtElem> eta_equation;  // monic, ascending
  std::optional<ExtElem> eta;         // when eta_equation is linear
  SingularityCertificate certificate = SingularityCertificate::Jacobian;

  /// Number of geometric points represented.
  int geometric_count() const;
};

std::string to_string(const SingularPoint& p);

/// Same base loci and eta values, ignoring certificates.
bool same_points(const std::vector<SingularPoint>& a, const std::vector<SingularPoint>& b);

/// Complete singular set of the reduced curve f = 0 in Tot(O(d)). Throws
/// NonReducedCurve when f is not squarefree in eta.
std::vector<SingularPoint> singular_locus(const SpectralPoly& f);
/// As above for the annihilating polynomial; the zero section is rejected.
std::vector<SingularPoint> singular_locus(const SpectralCurve& curve);

enum class TripleCase { Smooth, CaseA, CaseB };

struct TripleTest {
  TripleCase kind = TripleCase::Smooth;
  std::optional<ExtElem> eta;
};

/// Local test for eta^3 + a eta + b at the closed point locus = 0 (chart form).
TripleTest triple_singularity_test(const UniPoly& a, const UniPoly& b, const UniPoly& locus);
/// Throws NotDepressed unless the eta^2 coefficient vanishes.
TripleTest triple_singularity_test(const EtaPoly& cubic, const UniPoly& locus);

/// Predicted singular set of (eta - f)^2 - branch g^2: zeros of g at height f.
std::vector<SingularPoint> double_cover_singularities(const BinForm& f, const BinForm& g, const BinForm& branch);

int arithmetic_genus(int r, int d);

/// Polynomial solutions eta = lambda(w) of p(w, eta) = 0 with deg lambda <=
/// max_degree, for p monic in eta. Roots are lifted as power series from an
/// unramified rational base point; nullopt when none of the first
/// `max_candidates` integers is unramified.
std::optional<std::vector<UniPoly>> polynomial_eta_roots(const EtaPoly& p, int max_degree, int max_candidates = 20);

}  // namespace higgs
