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

#include "higgs/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "higgs/errors.hpp"

namespace higgs {

namespace {

using ZPoly = std::vector<Int>;        // integer coefficients, ascending
using FpPoly = std::vector<std::int64_t>;  // residues mod p, ascending, trimmed

/// Polynomial arithmetic over F_p for a word-sized odd prime p.
class Fp {
 public:
  explicit Fp(std::int64_t p) : p_(p) {}
  std::int64_t prime() const { return p_; }

  std::int64_t reduce(std::int64_t a) const {
    a %= p_;
    return a < 0 ? a + p_ : a;
  }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t r = 1, b = reduce(a), e = p_ - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return r;
  }

  static void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  static int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

  FpPoly from(const ZPoly& f) const {
    FpPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      Int m = f[i] % p_;
      if (m < 0) m += p_;
      r[i] = m.get_si();
    }
    trim(r);
    return r;
  }

  FpPoly sub(FpPoly a, const FpPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = reduce(a[i] - b[i]);
    trim(a);
    return a;
  }
  FpPoly add(FpPoly a, const FpPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p_;
    trim(a);
    return a;
  }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    trim(r);
    return r;
  }
  std::pair<FpPoly, FpPoly> divmod(FpPoly a, const FpPoly& b) const {
    if (b.empty()) throw Error(ErrorKind::ZeroInput, "F_p division by zero");
    if (deg(a) < deg(b)) return {{}, a};
    FpPoly q(static_cast<std::size_t>(deg(a) - deg(b)) + 1, 0);
    const std::int64_t li = inv(b.back());
    for (int i = deg(a); i >= deg(b); --i) {
      const std::int64_t c = a[static_cast<std::size_t>(i)] * li % p_;
      if (c == 0) continue;
      q[static_cast<std::size_t>(i - deg(b))] = c;
      for (int j = 0; j <= deg(b); ++j) {
        auto& x = a[static_cast<std::size_t>(i - deg(b) + j)];
        x = reduce(x - c * b[static_cast<std::size_t>(j)]);
      }
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  FpPoly mod(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }
  FpPoly monic(FpPoly a) const {
    if (a.empty()) return a;
    const std::int64_t li = inv(a.back());
    for (auto& c : a) c = c * li % p_;
    return a;
  }
  FpPoly gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
      FpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  /// Returns {s, t} with s*a + t*b = 1 for coprime a, b.
  std::pair<FpPoly, FpPoly> bezout(const FpPoly& a, const FpPoly& b) const {
    FpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      FpPoly s2 = sub(s0, mul(q, s1));
      FpPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (deg(r0) != 0) throw Error(ErrorKind::InternalAssumption, "Hensel factors are not coprime mod p");
    const std::int64_t li = inv(r0[0]);
    for (auto& c : s0) c = c * li % p_;
    for (auto& c : t0) c = c * li % p_;
    return {s0, t0};
  }
  FpPoly derivative(const FpPoly& a) const {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<std::int64_t>(i) % p_;
    trim(r);
    return r;
  }
  FpPoly powmod(FpPoly base, const Int& e, const FpPoly& m) const {
    FpPoly r{1};
    base = mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mod(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
    }
    return r;
  }

 private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void equal_degree_split(const Fp& fp, const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (Fp::deg(g) == d) {
    out.push_back(g);
    return;
  }
  Int p = fp.prime();
  Int e;
  mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::int64_t> dist(0, fp.prime() - 1);
  while (true) {
    FpPoly a(static_cast<std::size_t>(Fp::deg(g)));
    for (auto& c : a) c = dist(rng);
    Fp::trim(a);
    if (Fp::deg(a) < 1) continue;
    FpPoly b = fp.sub(fp.powmod(a, e, g), FpPoly{1});
    FpPoly h = fp.gcd(g, b);
    if (Fp::deg(h) > 0 && Fp::deg(h) < Fp::deg(g)) {
      equal_degree_split(fp, h, d, rng, out);
      equal_degree_split(fp, fp.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

/// Monic irreducible factors of a monic squarefree polynomial over F_p.
std::vector<FpPoly> factor_mod_p(const Fp& fp, FpPoly f) {
  std::vector<FpPoly> out;
  std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(fp.prime()));
  const FpPoly x{0, 1};
  FpPoly h = x;
  const Int p = fp.prime();
  for (int i = 1; 2 * i <= Fp::deg(f); ++i) {
    h = fp.powmod(h, p, f);
    FpPoly g = fp.gcd(f, fp.sub(h, x));
    if (Fp::deg(g) > 0) {
      equal_degree_split(fp, g, i, rng, out);
      f = fp.divmod(f, g).first;
      h = fp.mod(h, f);
    }
  }
  if (Fp::deg(f) > 0) out.push_back(fp.monic(f));
  return out;
}

ZPoly primitive_integer(const UniPoly& f) {
  Int l = 1;
  for (const auto& c : f.coeffs()) l = lcm(l, c.get_den());
  ZPoly z;
  Int g = 0;
  for (const auto& c : f.coeffs()) {
    Int v = c.get_num() * (l / c.get_den());
    z.push_back(v);
    g = gcd(g, v);
  }
  if (f.leading() < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

UniPoly to_unipoly(const ZPoly& z) {
  std::vector<Rat> v;
  for (const auto& c : z) v.emplace_back(c);
  return UniPoly(std::move(v));
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void zmod(ZPoly& a, const Int& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
}

ZPoly lift_fp(const FpPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<long>(c));
  return r;
}

/// Lifts a monic factorization F = g*h mod p to mod p^k (F monic mod p^k).
std::pair<ZPoly, ZPoly> hensel_pair(const Fp& fp, const ZPoly& F, const FpPoly& g0, const FpPoly& h0, int k) {
  auto [s, t] = fp.bezout(g0, h0);
  ZPoly g = lift_fp(g0), h = lift_fp(h0);
  Int m = fp.prime();
  for (int j = 1; j < k; ++j) {
    ZPoly diff = F;
    ZPoly gh = zmul(g, h);
    if (gh.size() > diff.size()) diff.resize(gh.size(), Int(0));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    for (auto& c : diff) c /= m;  // exact: F = g*h mod m
    FpPoly e = fp.from(diff);
    auto [q, r] = fp.divmod(fp.mul(s, e), h0);
    FpPoly dg = fp.add(fp.mul(t, e), fp.mul(q, g0));
    const FpPoly& dh = r;
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += m * static_cast<long>(dg[i]);
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += m * static_cast<long>(dh[i]);
    m *= fp.prime();
    zmod(g, m);
    zmod(h, m);
  }
  return {g, h};
}

std::vector<ZPoly> hensel_lift(const Fp& fp, ZPoly F, std::vector<FpPoly> factors, int k, const Int& pk) {
  std::vector<ZPoly> out;
  while (factors.size() > 1) {
    FpPoly g0 = factors.front();
    FpPoly h0{1};
    for (std::size_t i = 1; i < factors.size(); ++i) h0 = fp.mul(h0, factors[i]);
    auto [g, h] = hensel_pair(fp, F, g0, h0, k);
    out.push_back(g);
    F = h;
    zmod(F, pk);
    factors.erase(factors.begin());
  }
  out.push_back(F);
  return out;
}

Int symmetric(const Int& c, const Int& m) {
  Int r = c % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

/// Irreducible factors of a squarefree primitive integer polynomial of degree >= 2.
std::vector<UniPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const Int lc = f.back();

  // Choose the admissible prime with the fewest modular factors among a few.
  std::int64_t best_p = 0;
  std::vector<FpPoly> best;
  int good = 0;
  for (std::int64_t p = 3; good < 4 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    if (lc % p == 0) continue;
    Fp fp(p);
    FpPoly fbar = fp.from(f);
    if (Fp::deg(fp.gcd(fbar, fp.derivative(fbar))) != 0) continue;
    ++good;
    auto facs = factor_mod_p(fp, fp.monic(fbar));
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw Error(ErrorKind::InternalAssumption, "no admissible prime for factorization");
  if (best.size() == 1) return {to_unipoly(f).monic()};

  // Coefficient bound for lc * (any factor): |lc| * 2^n * (n + 1) * max|f_i|.
  Int maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Int(abs(c)));
  Int bound = abs(lc) * (Int(1) << n) * (n + 1) * maxc;
  const Fp fp(best_p);
  int k = 1;
  Int pk = best_p;
  while (pk <= 2 * bound) {
    pk *= best_p;
    ++k;
  }
  // Monic image of f mod p^k.
  Int lc_mod = lc % pk;
  if (lc_mod < 0) lc_mod += pk;
  Int lcinv;
  mpz_invert(lcinv.get_mpz_t(), lc_mod.get_mpz_t(), pk.get_mpz_t());
  ZPoly F = f;
  for (auto& c : F) c *= lcinv;
  zmod(F, pk);
  std::vector<ZPoly> lifted = hensel_lift(fp, F, best, k, pk);

  std::vector<UniPoly> out;
  UniPoly rest = to_unipoly(f);
  ZPoly rest_z = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      const Int lcr = rest_z.back();
      ZPoly cand{lcr};
      for (auto i : idx) {
        cand = zmul(cand, lifted[i]);
        zmod(cand, pk);
      }
      for (auto& c : cand) c = symmetric(c, pk);
      const UniPoly g = to_unipoly(primitive_integer(to_unipoly(cand)));
      if (g.degree() > 0 && divides(g, rest)) {
        out.push_back(g.monic());
        rest = exact_div(rest, g);
        rest_z = primitive_integer(rest);
        for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[j]));
        found = true;
        break;
      }
      // Next combination.
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == lifted.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) out.push_back(rest.monic());
  return out;
}

}  // namespace

std::vector<Factor> factor_rational(const UniPoly& f) {
  std::vector<Factor> out;
  for (const auto& [part, mult] : squarefree_decompose(f)) {
    if (part.degree() == 1) {
      out.push_back({part, mult});
      continue;
    }
    // Strip the factor w first; it is common in branch data.
    UniPoly q = part;
    if (q.coeff(0) == 0) {
      out.push_back({UniPoly::variable(), mult});
      q = exact_div(q, UniPoly::variable());
      if (q.degree() == 0) continue;
      if (q.degree() == 1) {
        out.push_back({q.monic(), mult});
        continue;
      }
    }
    for (auto& g : zassenhaus(primitive_integer(q))) out.push_back({std::move(g), mult});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    auto c = canonical_compare(a.factor, b.factor);
    if (c != 0) return c < 0;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

std::vector<Rat> rational_roots(const UniPoly& f) {
  std::vector<Rat> roots;
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "roots of the zero polynomial");
  for (const auto& fac : factor_rational(f)) {
    if (fac.factor.degree() == 1) roots.push_back(-fac.factor.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool is_irreducible(const UniPoly& f) {
  if (f.degree() < 1) return false;
  const auto facs = factor_rational(f);
  return facs.size() == 1 && facs.front().multiplicity == 1;
}

}  // namespace higgs
