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

#include "higgs/factorization.hpp"

#include "higgs/errors.hpp"

namespace higgs {

std::string to_string(CoverVerdict v) {
  switch (v) {
    case CoverVerdict::Nilpotent: return "nilpotent";
    case CoverVerdict::Scalar: return "scalar";
    case CoverVerdict::Birational: return "birational";
    case CoverVerdict::Factors: return "factors";
  }
  return "?";
}

FactorizationReport intermediate_factorization(const SectionData& sec) {
  const auto r = sec.cover().standard_cyclic_order();
  if (!r) throw Error(ErrorKind::Unsupported, "factorization is implemented for standard cyclic covers only");
  const int g = subcover_index(sec);
  const int rq = *r / g;
  std::map<int, BinForm> comps;
  for (const auto& [k, h] : sec.components()) comps.emplace(k / g, h);
  FactorizationReport rep{g, rq, SectionData(make_standard_cyclic(rq), sec.twist_degree(), std::move(comps)),
                          CoverVerdict::Birational};
  if (sec.components().empty()) {
    rep.verdict = CoverVerdict::Nilpotent;
  } else if (g == *r) {
    rep.verdict = CoverVerdict::Scalar;
  } else if (g > 1) {
    rep.verdict = CoverVerdict::Factors;
  }

  if (!(expand_section(rep.tau).inflate(g) == expand_section(sec))) {
    throw Error(ErrorKind::InternalAssumption, "p^* tau does not re-expand to sigma");
  }
  const auto [cd, annihilating] = char_and_annihilating(sec);
  const EtaPoly chr = cd.poly().dehomogenize();
  const EtaPoly ann = annihilating.dehomogenize();
  if (!(chr == pow(ann, static_cast<unsigned>(g)))) {
    throw Error(ErrorKind::InternalAssumption, "characteristic polynomial is not the g-th power of the annihilating one");
  }
  return rep;
}

SpectralPointValue eval_spectral_point(const SectionData& sec, const ProjPoint& x) {
  const auto r = sec.cover().standard_cyclic_order();
  if (!r) throw Error(ErrorKind::Unsupported, "point evaluation needs a standard cyclic cover");
  const Rat x0 = x.s(), y0 = x.t();
  Rat xr = 1, yr = 1;
  for (int i = 0; i < *r; ++i) {
    xr *= x0;
    yr *= y0;
  }
  const ProjPoint base(xr, yr);
  Rat scale_d = 1;
  for (int i = 0; i < sec.twist_degree(); ++i) scale_d *= base.scale();
  return {base, expand_section(sec).eval(x0, y0) / scale_d};
}

bool on_curve(const SpectralPoly& f, const SpectralPointValue& p) {
  const Rat s = p.base.s(), t = p.base.t();
  Rat acc = 0, power = 1;
  for (const auto& c : f.coeffs()) {
    acc += c.eval(s, t) * power;
    power *= p.eta;
  }
  return acc == 0;
}

BirationalityVerdict birationality_verdict(const SectionData& sec) {
  BirationalityVerdict v;
  const FactorizationReport rep = intermediate_factorization(sec);
  v.verdict = rep.verdict;
  switch (rep.verdict) {
    case CoverVerdict::Nilpotent:
      v.justification = "sigma = 0: the Higgs field is zero";
      break;
    case CoverVerdict::Scalar:
      v.justification = "sigma is a pullback: Phi = tau (x) id is scalar";
      break;
    case CoverVerdict::Factors:
      v.justification = "sigma = p^* tau through the intermediate cyclic cover of degree " +
                        std::to_string(rep.quotient_degree) + "; X -> C has degree " + std::to_string(rep.subcover_index);
      break;
    case CoverVerdict::Birational:
      v.justification = "support generates Z/" + std::to_string(sec.rank()) + ": X -> C is birational";
      break;
  }
  if (rep.verdict == CoverVerdict::Birational) {
    // Distinct eta-values over an unramified fiber witness that psi has degree 1.
    const EtaPoly chr = invariant_sections(sec).poly().dehomogenize();
    for (int w0 = 1; w0 <= 5 && !v.fiber_witness; ++w0) {
      const UniPoly fiber = chr.eval_w(w0);
      v.fiber_witness = gcd(fiber, fiber.derivative()).degree() == 0;
    }
  }
  v.factorization = rep;
  return v;
}

}  // namespace higgs
