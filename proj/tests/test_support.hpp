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

// Shared generators and independent oracles for the test suites.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "higgs/binform.hpp"
#include "higgs/etapoly.hpp"
#include "higgs/matrix.hpp"
#include "higgs/unipoly.hpp"

namespace higgs::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Small rationals, integers most of the time.
  Rat rat(int range = 5) {
    const int num = integer(-range, range);
    const int den = integer(0, 3) == 0 ? integer(1, 4) : 1;
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  Rat nonzero_rat(int range = 5) {
    Rat r = 0;
    while (r == 0) r = rat(range);
    return r;
  }

  UniPoly poly(int max_degree, int range = 5) {
    std::vector<Rat> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& x : c) x = rat(range);
    return UniPoly(std::move(c));
  }

  /// Polynomial of exact degree.
  UniPoly poly_exact(int degree, int range = 5) {
    std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = rat(range);
    c.back() = nonzero_rat(range);
    return UniPoly(std::move(c));
  }

  BinForm form(int degree, int range = 5) {
    std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = rat(range);
    return BinForm(degree, std::move(c));
  }

  BinForm nonzero_form(int degree, int range = 5) {
    BinForm f = form(degree, range);
    while (f.is_zero()) f = form(degree, range);
    return f;
  }

  /// Nonzero form with no repeated linear factor (checked on both charts).
  BinForm squarefree_form(int degree, int range = 5);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline BinForm Gen::squarefree_form(int degree, int range) {
  while (true) {
    BinForm f = nonzero_form(degree, range);
    if (degree == 0) return f;
    const UniPoly p = f.dehomogenize(Chart::T);
    if (p.degree() < degree - 1) continue;  // t^2 would divide f
    if (gcd(p, p.derivative()).degree() > 0) continue;
    return f;
  }
}

/// Leibniz permutation expansion; independent of the library determinants.
template <class R>
R leibniz_det(const Matrix<R>& m) {
  const int n = m.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  R total = RingOps<R>::zero();
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    }
    R term = RingOps<R>::one();
    for (int i = 0; i < n; ++i) term = term * m(i, perm[static_cast<std::size_t>(i)]);
    if (inversions % 2) {
      total -= term;
    } else {
      total += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline UniPoly w() { return UniPoly::variable(); }
inline UniPoly cst(const Rat& c) { return UniPoly::constant(c); }

/// det(eta - Phi) for the standard cyclic cover of degree r, computed
/// independently of the matrix path as Res_u(u^r - w, eta - sigma(u)) with
/// sigma reduced modulo u^r - w.
inline EtaPoly cyclic_char_oracle(int r, const BinForm& sigma) {
  std::vector<std::vector<Rat>> red(static_cast<std::size_t>(r));
  for (int a = 0; a <= sigma.degree(); ++a) {
    auto& c = red[static_cast<std::size_t>(a % r)];
    c.resize(static_cast<std::size_t>(a / r) + 1);
    c[static_cast<std::size_t>(a / r)] = sigma.coeff(a);
  }
  std::vector<EtaPoly> f(static_cast<std::size_t>(r) + 1, EtaPoly{});
  f[0] = EtaPoly(-w());
  f[static_cast<std::size_t>(r)] = EtaPoly::constant(1);
  std::vector<EtaPoly> g;
  for (int k = 0; k < r; ++k) g.push_back(-EtaPoly(UniPoly(red[static_cast<std::size_t>(k)])));
  g[0] += EtaPoly::eta();
  return sylvester_resultant(std::move(f), std::move(g));
}

}  // namespace higgs::testing
