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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "higgs/errors.hpp"
#include "higgs/jobs.hpp"
#include "test_support.hpp"

using namespace higgs;
using higgs::testing::Gen;

namespace {

const BinForm S = BinForm::monomial(1, 1);
const BinForm T = BinForm::monomial(1, 0);
const BinForm ONE = BinForm::constant(1);

SectionData cyclic(int r, int d, std::map<int, BinForm> comps) { return SectionData(make_standard_cyclic(r), d, std::move(comps)); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// The chart-t loci multiply to the squarefree part of F(w, 1), and [1:0]
// carries a point exactly when F vanishes there.
bool lies_over_exactly(const std::vector<SingularPoint>& pts, const BinForm& f) {
  UniPoly prod = UniPoly::constant(1);
  bool at_infinity = false;
  for (const auto& p : pts) {
    if (p.chart == Chart::T) {
      prod *= p.locus;
    } else {
      at_infinity = true;
    }
  }
  return prod == squarefree_part(f.dehomogenize(Chart::T)).monic() && at_infinity == (f.coeff(f.degree()) == 0);
}

SpectralPoly cubic(int d, const BinForm& c1, const BinForm& c0) {
  return SpectralPoly(d, {c0, c1, BinForm::zero(d), ONE});
}

Outcome conic_identity() {
  Outcome o;
  Gen gen(101);
  for (int i = 0; i < 20; ++i) {
    const int d = 1 + i % 5;
    const BinForm f = gen.nonzero_form(d - 1);
    if (!(invariant_sections(cyclic(2, d, {{1, f}})).poly() == SpectralPoly(d, {-(S * T * f * f), BinForm::zero(d), ONE}))) {
      o.fail("instance " + std::to_string(i));
    }
  }
  return o;
}

Outcome general_double() {
  Outcome o;
  Gen gen(102);
  for (int i = 0; i < 20; ++i) {
    const int d = 1 + i % 4;
    const BinForm f = gen.form(d), g = gen.nonzero_form(d - 1);
    const auto curve = spectral_curve(cyclic(2, d, {{0, f}, {1, g}}));
    if (!(curve.chars.poly() == SpectralPoly(d, {f * f - S * T * g * g, Rat(-2) * f, ONE}))) o.fail("f_phi, instance " + std::to_string(i));
    const auto pts = singular_locus(curve);
    if (!same_points(pts, double_cover_singularities(f, g, S * T))) o.fail("predictor, instance " + std::to_string(i));
    if (!lies_over_exactly(pts, g)) o.fail("zeros of g, instance " + std::to_string(i));
    for (const auto& p : pts) {
      if (!p.eta || !(*p.eta == ext_eval(f.dehomogenize(p.chart), p.locus))) o.fail("eta = f, instance " + std::to_string(i));
    }
  }
  return o;
}

Outcome triple_cover() {
  Outcome o;
  Gen gen(103);
  for (int i = 0; i < 20; ++i) {
    const int d = 1 + i % 4;
    const BinForm f = gen.nonzero_form(d - 1), g = gen.nonzero_form(d - 1);
    const auto curve = spectral_curve(cyclic(3, d, {{1, f}, {2, g}}));
    const BinForm branch = T * pow(f, 3) - S * pow(g, 3);
    if (!(curve.chars.poly() == cubic(d, Rat(-3) * S * T * f * g, -(S * T * T * pow(f, 3) + S * S * T * pow(g, 3))))) {
      o.fail("f_phi, instance " + std::to_string(i));
    }
    if (!(discriminant_eta(curve) == Rat(27) * S * S * T * T * pow(branch, 2))) o.fail("discriminant, instance " + std::to_string(i));
    if (!lies_over_exactly(singular_locus(curve), branch)) o.fail("singular set, instance " + std::to_string(i));
  }
  return o;
}

Outcome general_triple() {
  Outcome o;
  Gen gen(104);
  const int shapes[][3] = {{1, 1, 1}, {1, 1, 2}, {2, 1, 3}, {1, 2, 3}, {2, 2, 3}};
  for (int i = 0; i < 20; ++i) {
    const auto [l1, l2, d] = shapes[i % 5];
    const BinForm a = gen.nonzero_form(2 * l1 - l2), b = gen.nonzero_form(2 * l2 - l1);
    const BinForm g = gen.nonzero_form(d - l1), h = gen.nonzero_form(d - l2);
    const auto cover = make_cyclic_triple(l1, l2, a, b);
    if (!validate_algebra(*cover).valid) o.fail("algebra, instance " + std::to_string(i));
    const SpectralPoly ann = annihilating_poly(SectionData(cover, d, {{1, g}, {2, h}}));
    if (!(ann == cubic(d, Rat(-3) * a * b * g * h, -(a * a * b * pow(g, 3) + a * b * b * pow(h, 3))))) {
      o.fail("f_phi, instance " + std::to_string(i));
    }
    if (!(discriminant_eta(ann) == Rat(27) * a * a * b * b * pow(a * pow(g, 3) - b * pow(h, 3), 2))) {
      o.fail("discriminant, instance " + std::to_string(i));
    }
  }
  return o;
}

Outcome degree_four() {
  Outcome o;
  Gen gen(105);
  for (int d = 1; d <= 5; ++d) {
    const auto sec = cyclic(4, d, {{2, gen.nonzero_form(d - 1)}});
    const auto rep = intermediate_factorization(sec);
    if (annihilating_poly(sec).degree() != 2) o.fail("eta-degree, d = " + std::to_string(d));
    if (rep.subcover_index != 2) o.fail("subcover index, d = " + std::to_string(d));
    if (!(expand_section(rep.tau).inflate(2) == expand_section(sec))) o.fail("tau, d = " + std::to_string(d));
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Gen gen(106);
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 100; ++i) {
    const int r = gen.integer(1, 6), d = gen.integer(0, 4);
    const BinForm sigma = gen.form(r * d);
    if (!(invariant_sections(decompose_section(r, d, sigma)).poly().dehomogenize() ==
          higgs::testing::cyclic_char_oracle(r, sigma))) {
      o.fail("instance " + std::to_string(i));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 30) o.fail("took " + std::to_string(secs) + " s");
  return o;
}

Outcome char_is_min_power() {
  Outcome o;
  Gen gen(107);
  for (int r = 1; r <= 8; ++r) {
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      const int d = gen.integer(1, 3);
      std::map<int, BinForm> comps;
      for (int k = 0; k < r; ++k) {
        if (mask & (1u << k)) comps.emplace(k, gen.nonzero_form(k == 0 ? d : d - 1));
      }
      const auto sec = cyclic(r, d, comps);
      const auto [chars, ann] = char_and_annihilating(sec);
      const int g = r / ann.degree();
      if (g != subcover_index(sec) || !(chars.poly().dehomogenize() == pow(ann.dehomogenize(), static_cast<unsigned>(g)))) {
        o.fail("r = " + std::to_string(r) + ", support mask " + std::to_string(mask));
      }
    }
  }
  return o;
}

Outcome genus() {
  Outcome o;
  for (int d = 1; d <= 10; ++d) {
    if (arithmetic_genus(3, d) != 3 * d - 2) o.fail("r = 3, d = " + std::to_string(d));
  }
  Gen gen(108);
  for (int d = 2; d <= 5; ++d) {
    const BinForm g = gen.squarefree_form(d - 1);
    int nodes = 0;
    for (const auto& p : singular_locus(spectral_curve(cyclic(2, d, {{1, g}})))) nodes += p.geometric_count();
    if (nodes != d - 1 || arithmetic_genus(2, d) != d - 1) o.fail("conic, d = " + std::to_string(d));
  }
  return o;
}

void bundles(int rank, std::vector<int>& cur, std::vector<SplitBundle>& out) {
  if (static_cast<int>(cur.size()) == rank) {
    out.push_back(SplitBundle{cur});
    return;
  }
  for (int a = -3; a <= 3; ++a) {
    cur.push_back(a);
    bundles(rank, cur, out);
    cur.pop_back();
  }
}

Outcome stability() {
  Outcome o;
  for (int r = 1; r <= 5; ++r) {
    for (int m = -6; m <= 6; ++m) {
      if (!pushforward_relation_check(r, m).holds) o.fail("relation r = " + std::to_string(r) + ", m = " + std::to_string(m));
    }
  }
  std::vector<SplitBundle> all;
  for (int rank = 1; rank <= 3; ++rank) {
    std::vector<int> cur;
    bundles(rank, cur, all);
  }
  Gen gen(109);
  int mismatches = 0;
  for (const auto& m : all) {
    for (int i = 0; i < 10; ++i) {
      const int d = gen.integer(1, 3);
      const auto sec = cyclic(2, d, {{0, gen.form(d)}, {1, gen.nonzero_form(d - 1)}});
      if (double_cover_verdict(m, sec).status != gieseker_verdict(m, sec).status) ++mismatches;
    }
  }
  if (mismatches) o.fail(std::to_string(mismatches) + " verdict mismatches");
  return o;
}

Outcome repro() {
  Outcome o;
  const auto out = std::filesystem::temp_directory_path() / "higgs_acceptance_repro.json";
  std::string previous;
  for (int run = 0; run < 2; ++run) {
    std::filesystem::remove(out);
    const auto start = std::chrono::steady_clock::now();
    const std::string cmd = std::string(HIGGSCOVER_PATH) + " repro --output " + out.string();
    const int status = std::system(cmd.c_str());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) o.fail("exit status " + std::to_string(WEXITSTATUS(status)));
    if (secs >= 120) o.fail("took " + std::to_string(secs) + " s");
    std::ifstream in(out);
    if (!in) {
      o.fail("no report written");
      return o;
    }
    const auto report = cli::json::parse(in);
    if (report["results"]["golden_match"] != true) o.fail("golden mismatch");
    const std::string view = cli::golden_view(report).dump();
    if (run == 1 && view != previous) o.fail("reports differ between runs");
    previous = view;
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"conic identity", conic_identity},
      {"general double cover", general_double},
      {"triple cover", triple_cover},
      {"general cyclic triple", general_triple},
      {"degree-4 factorization", degree_four},
      {"resultant oracle equivalence", oracle_equivalence},
      {"char = min^g over all supports", char_is_min_power},
      {"arithmetic genus and node counts", genus},
      {"stability relation and double cover verdicts", stability},
      {"repro against golden report", repro},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << static_cast<int>(secs * 1000) << " ms)" << (o.ok ? "" : " -- " + o.detail) << std::endl;
  }
  return failed ? 1 : 0;
}
