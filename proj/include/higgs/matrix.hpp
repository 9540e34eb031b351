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

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "higgs/errors.hpp"
#include "higgs/etapoly.hpp"
#include "higgs/unipoly.hpp"

namespace higgs {

/// Ring operations needed by the generic determinant routines.
template <class R>
struct RingOps;

template <>
struct RingOps<Rat> {
  static Rat zero() { return 0; }
  static Rat one() { return 1; }
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
};

template <>
struct RingOps<UniPoly> {
  static UniPoly zero() { return {}; }
  static UniPoly one() { return UniPoly::constant(1); }
  static bool is_zero(const UniPoly& x) { return x.is_zero(); }
  static UniPoly exact_div(const UniPoly& a, const UniPoly& b) { return higgs::exact_div(a, b); }
};

template <>
struct RingOps<EtaPoly> {
  static EtaPoly zero() { return {}; }
  static EtaPoly one() { return EtaPoly::constant(1); }
  static bool is_zero(const EtaPoly& x) { return x.is_zero(); }
  static EtaPoly exact_div(const EtaPoly& a, const EtaPoly& b) { return higgs::exact_div(a, b); }
};

/// Dense row-major matrix over a commutative ring.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), RingOps<R>::zero()) {
    if (rows <= 0 || cols <= 0) throw Error(ErrorKind::Shape, "matrix dimensions must be positive");
  }
  Matrix(int rows, int cols, std::vector<R> entries) : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows <= 0 || cols <= 0 || data_.size() != static_cast<std::size_t>(rows * cols)) {
      throw Error(ErrorKind::Shape, "entry count does not match matrix shape");
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = RingOps<R>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  R& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const R& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const std::vector<R>& entries() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!RingOps<R>::is_zero(x)) return false;
    }
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::Shape, "matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        if (RingOps<R>::is_zero(a(i, k))) continue;
        for (int j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    }
    return m;
  }
  friend Matrix operator*(const R& c, const Matrix& a) {
    Matrix m = a;
    for (auto& x : m.data_) x = c * x;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::Shape, "matrix sum shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<R> data_;
};

/// Matrix of polynomials in the chart coordinate w.
using PolyMatrix = Matrix<UniPoly>;

/// Laplace expansion along rows with minors memoized by column subset.
template <class R>
R det_cofactor(const Matrix<R>& m) {
  if (!m.is_square()) throw Error(ErrorKind::Shape, "determinant of a non-square matrix");
  const int n = m.rows();
  if (n > 20) throw Error(ErrorKind::Unsupported, "cofactor expansion limited to size 20");
  // minor(mask) = determinant of rows [n - popcount(mask), n) and columns in mask.
  std::unordered_map<std::uint32_t, R> memo;
  auto minor = [&](auto&& self, std::uint32_t mask) -> R {
    if (mask == 0) return RingOps<R>::one();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int row = n - __builtin_popcount(mask);
    R acc = RingOps<R>::zero();
    int sign_pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1U << j))) continue;
      if (!RingOps<R>::is_zero(m(row, j))) {
        R term = m(row, j) * self(self, mask & ~(1U << j));
        if (sign_pos % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++sign_pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor(minor, (n == 32 ? 0xFFFFFFFFU : ((1U << n) - 1U)));
}

/// Fraction-free Bareiss elimination; every division is exact in an
/// integral domain.
template <class R>
R det_bareiss(Matrix<R> m) {
  if (!m.is_square()) throw Error(ErrorKind::Shape, "determinant of a non-square matrix");
  const int n = m.rows();
  bool negate = false;
  R prev = RingOps<R>::one();
  for (int k = 0; k < n - 1; ++k) {
    if (RingOps<R>::is_zero(m(k, k))) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!RingOps<R>::is_zero(m(i, k))) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return RingOps<R>::zero();
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        R num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = RingOps<R>::exact_div(num, prev);
      }
      m(i, k) = RingOps<R>::zero();
    }
    prev = m(k, k);
  }
  R det = m(n - 1, n - 1);
  if (negate) det = RingOps<R>::zero() - det;
  return det;
}

/// Cofactor expansion up to size 6, Bareiss above.
template <class R>
R determinant(const Matrix<R>& m) {
  if (!m.is_square()) throw Error(ErrorKind::Shape, "determinant of a non-square matrix");
  return m.rows() <= 8 ? det_cofactor(m) : det_bareiss(m);
}

/// Sylvester matrix of f and g (ascending coefficient vectors, trailing
/// zeros ignored). Rows 0..deg g - 1 carry f, the rest carry g.
template <class R>
Matrix<R> sylvester_matrix(std::vector<R> f, std::vector<R> g) {
  auto trim = [](std::vector<R>& v) {
    while (!v.empty() && RingOps<R>::is_zero(v.back())) v.pop_back();
  };
  trim(f);
  trim(g);
  const int m = static_cast<int>(f.size()) - 1;
  const int n = static_cast<int>(g.size()) - 1;
  const int size = m + n;
  Matrix<R> s(size, size);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) s(i, i + k) = f[static_cast<std::size_t>(m - k)];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) s(n + i, i + k) = g[static_cast<std::size_t>(n - k)];
  }
  return s;
}

/// Resultant as the determinant of the Sylvester matrix.
template <class R>
R sylvester_resultant(std::vector<R> f, std::vector<R> g) {
  auto trim = [](std::vector<R>& v) {
    while (!v.empty() && RingOps<R>::is_zero(v.back())) v.pop_back();
  };
  trim(f);
  trim(g);
  if (f.empty() && g.empty()) throw Error(ErrorKind::UndefinedResultant, "both inputs are zero");
  if (f.empty() || g.empty()) {
    // Res(0, c) = 1 for a nonzero constant c; otherwise 0.
    const auto& other = f.empty() ? g : f;
    return other.size() == 1 ? RingOps<R>::one() : RingOps<R>::zero();
  }
  if (f.size() == 1 && g.size() == 1) return RingOps<R>::one();
  return det_bareiss(sylvester_matrix(std::move(f), std::move(g)));
}

/// Res_eta(f, g) in Q[w].
UniPoly resultant(const EtaPoly& f, const EtaPoly& g);

/// det(eta*I - A) by the requested route.
enum class DetMethod { Auto, Cofactor, Bareiss };
EtaPoly char_poly_matrix(const PolyMatrix& a, DetMethod method = DetMethod::Auto);

/// Squarefree part of the characteristic polynomial, verified to annihilate A.
EtaPoly min_poly_matrix(const PolyMatrix& a);
/// Same, reusing a known characteristic polynomial.
EtaPoly min_poly_matrix(const PolyMatrix& a, const EtaPoly& chi);

/// p(A) = sum_k p_k(w) A^k.
PolyMatrix evaluate_at_matrix(const EtaPoly& p, const PolyMatrix& a);

std::string to_string(const PolyMatrix& m);

}  // namespace higgs
