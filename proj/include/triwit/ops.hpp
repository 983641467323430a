// Copyright 2026 The triwit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <utility>

#include "triwit/space.hpp"

namespace triwit {

namespace detail {

// Lowering matrix of dimension `dim` with the coefficients of the given kind
// and doubled weight. Used both for full single-mode matrices and for the
// small windows of the Holstein-Primakoff limit study.
inline Matrix lowering_matrix(ModeKind kind, int two_jk, int dim) {
  Matrix m = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    double c = 0.0;
    switch (kind) {
      case ModeKind::Boson:
        c = std::sqrt(static_cast<double>(n));
        break;
      case ModeKind::Spin:
        c = std::sqrt(static_cast<double>(n) * (two_jk - n + 1));
        break;
      case ModeKind::SU11:
        c = std::sqrt(static_cast<double>(n) * (two_jk + n - 1));
        break;
    }
    m(n - 1, n) = c;
  }
  return m;
}

}  // namespace detail

/// Single-mode lowering operator: a (boson), J- (spin), K- (su11).
inline Matrix mode_lower(const ModeSpec& mode) {
  return detail::lowering_matrix(mode.kind, mode.two_jk, mode.dim());
}

/// Single-mode raising operator, the conjugate transpose of mode_lower.
inline Matrix mode_raise(const ModeSpec& mode) { return mode_lower(mode).adjoint(); }

/// Level-counting operator diag(0, 1, 2, ...): N (boson), J_z + j (spin),
/// K_z - k (su11).
inline Matrix mode_number(const ModeSpec& mode) {
  Matrix m = Matrix::Zero(mode.dim(), mode.dim());
  for (int n = 0; n < mode.dim(); ++n) m(n, n) = static_cast<double>(n);
  return m;
}

/// J_z (spin) or K_z (su11); diag shifted by the half-integer weight.
inline Matrix mode_weight(const ModeSpec& mode) {
  if (mode.kind == ModeKind::Boson)
    throw std::invalid_argument("weight operator is defined for spin and su11 modes");
  const double shift = (mode.kind == ModeKind::Spin) ? -0.5 * mode.two_jk : 0.5 * mode.two_jk;
  Matrix m = Matrix::Zero(mode.dim(), mode.dim());
  for (int n = 0; n < mode.dim(); ++n) m(n, n) = n + shift;
  return m;
}

/// Position and momentum x = (a+a^dag)/sqrt(2), p = (a-a^dag)/(i sqrt(2));
/// [x,p] = i on the safe-projected subspace.
inline std::pair<Matrix, Matrix> quadratures(const ModeSpec& mode) {
  if (mode.kind != ModeKind::Boson)
    throw std::invalid_argument("quadratures are defined for boson modes only");
  const Matrix a = mode_lower(mode);
  const Matrix ad = a.adjoint();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix x = inv_sqrt2 * (a + ad);
  Matrix p = Complex(0.0, -inv_sqrt2) * (a - ad);
  return {std::move(x), std::move(p)};
}

/// Lift a single-mode matrix to the composite space, acting as identity on
/// every other mode.
inline Operator embed(const Matrix& op, int mode_index, const CompositeSpace& space) {
  if (mode_index < 0 || mode_index >= space.mode_count())
    throw std::invalid_argument("embed: mode index out of range");
  const int d = space.mode(mode_index).dim();
  if (op.rows() != d || op.cols() != d)
    throw std::invalid_argument("embed: matrix dimension does not match mode dimension");

  const Index stride = space.stride(mode_index);
  const Index blocks = space.dim() / (stride * d);
  Matrix out = Matrix::Zero(space.dim(), space.dim());
  for (Index b = 0; b < blocks; ++b) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        if (op(i, j) == Complex(0.0, 0.0)) continue;
        const Index row0 = (b * d + i) * stride;
        const Index col0 = (b * d + j) * stride;
        for (Index s = 0; s < stride; ++s) out(row0 + s, col0 + s) = op(i, j);
      }
    }
  }
  return {space, std::move(out)};
}

inline Operator embedded_lower(const CompositeSpace& space, int mode_index) {
  return embed(mode_lower(space.mode(mode_index)), mode_index, space);
}
inline Operator embedded_raise(const CompositeSpace& space, int mode_index) {
  return embed(mode_raise(space.mode(mode_index)), mode_index, space);
}
inline Operator embedded_number(const CompositeSpace& space, int mode_index) {
  return embed(mode_number(space.mode(mode_index)), mode_index, space);
}

inline Operator commutator(const Operator& a, const Operator& b) {
  require_same_space(a, b);
  return {a.space, a.mat * b.mat - b.mat * a.mat};
}

inline Operator anticommutator(const Operator& a, const Operator& b) {
  require_same_space(a, b);
  return {a.space, a.mat * b.mat + b.mat * a.mat};
}

/// Build a diagonal operator from a function of the occupation list.
template <typename F>
inline Operator diagonal_op(const CompositeSpace& space, F&& value_of_occ) {
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  for (Index f = 0; f < space.dim(); ++f) m(f, f) = value_of_occ(space.occupations_of(f));
  return {space, std::move(m)};
}

}  // namespace triwit
