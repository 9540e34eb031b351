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

#include "higgs/matrix.hpp"

#include <sstream>

namespace higgs {

UniPoly resultant(const EtaPoly& f, const EtaPoly& g) {
  return sylvester_resultant<UniPoly>(f.coeffs(), g.coeffs());
}

EtaPoly char_poly_matrix(const PolyMatrix& a, DetMethod method) {
  if (!a.is_square()) throw Error(ErrorKind::Shape, "characteristic polynomial of a non-square matrix");
  const int n = a.rows();
  Matrix<EtaPoly> m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = -EtaPoly(a(i, j));
      if (i == j) m(i, j) += EtaPoly::eta();
    }
  }
  switch (method) {
    case DetMethod::Cofactor: return det_cofactor(m);
    case DetMethod::Bareiss: return det_bareiss(m);
    case DetMethod::Auto: break;
  }
  return determinant(m);
}

PolyMatrix evaluate_at_matrix(const EtaPoly& p, const PolyMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::Shape, "evaluating a polynomial at a non-square matrix");
  const int n = a.rows();
  PolyMatrix acc(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * a;
    const UniPoly& c = p.coeffs()[static_cast<std::size_t>(k)];
    for (int i = 0; i < n; ++i) acc(i, i) += c;
  }
  return acc;
}

EtaPoly min_poly_matrix(const PolyMatrix& a) { return min_poly_matrix(a, char_poly_matrix(a)); }

EtaPoly min_poly_matrix(const PolyMatrix& a, const EtaPoly& chi) {
  EtaPoly m = squarefree_part_eta(chi);
  // A squarefree characteristic polynomial annihilates by Cayley-Hamilton.
  if (m.degree() < chi.degree() && !evaluate_at_matrix(m, a).is_zero()) {
    throw Error(ErrorKind::InternalAssumption,
                "squarefree part " + to_string(m) + " does not annihilate " + to_string(a));
  }
  return m;
}

std::string to_string(const PolyMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace higgs
