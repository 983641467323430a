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
//
// Matrix-level partial transposition over arbitrary mode subsets, defined in
// the fixed level basis of the space. This is the ground truth every
// symbolic pt() lowers to; transposing whole matrices sidesteps the operator
// ordering pitfalls of transposing monomials term by term.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "triwit/families.hpp"
#include "triwit/ops.hpp"
#include "triwit/space.hpp"
#include "triwit/states.hpp"

namespace triwit {

/// X^{T_S}: <i_S i_R| X^{T_S} |j_S j_R> = <j_S i_R| X |i_S j_R>.
/// An empty subset is the identity map (accepted, returns a copy).
inline Matrix partial_transpose(const CompositeSpace& space, const Matrix& mat,
                                std::span<const int> subset) {
  if (mat.rows() != space.dim() || mat.cols() != space.dim())
    throw std::invalid_argument("matrix dimension does not match space");
  std::vector<bool> in_subset(static_cast<std::size_t>(space.mode_count()), false);
  for (int m : subset) {
    if (m < 0 || m >= space.mode_count())
      throw std::invalid_argument("partial transpose: mode index out of range");
    in_subset[static_cast<std::size_t>(m)] = true;
  }
  if (subset.empty()) return mat;

  // Split each flat index into a subset key and a rest key, and precompute
  // the inverse map so entries can be permuted in O(dim^2).
  const Index dim = space.dim();
  Index dim_s = 1, dim_r = 1;
  for (int m = 0; m < space.mode_count(); ++m)
    (in_subset[static_cast<std::size_t>(m)] ? dim_s : dim_r) *= space.mode(m).dim();

  std::vector<Index> skey(static_cast<std::size_t>(dim)), rkey(static_cast<std::size_t>(dim));
  std::vector<Index> recon(static_cast<std::size_t>(dim));
  for (Index f = 0; f < dim; ++f) {
    const auto occ = space.occupations_of(f);
    Index s = 0, r = 0;
    for (int m = 0; m < space.mode_count(); ++m) {
      const int d = space.mode(m).dim();
      if (in_subset[static_cast<std::size_t>(m)])
        s = s * d + occ[static_cast<std::size_t>(m)];
      else
        r = r * d + occ[static_cast<std::size_t>(m)];
    }
    skey[static_cast<std::size_t>(f)] = s;
    rkey[static_cast<std::size_t>(f)] = r;
    recon[static_cast<std::size_t>(s * dim_r + r)] = f;
  }

  Matrix out(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      const Index ii = recon[static_cast<std::size_t>(
          skey[static_cast<std::size_t>(j)] * dim_r + rkey[static_cast<std::size_t>(i)])];
      const Index jj = recon[static_cast<std::size_t>(
          skey[static_cast<std::size_t>(i)] * dim_r + rkey[static_cast<std::size_t>(j)])];
      out(i, j) = mat(ii, jj);
    }
  }
  return out;
}

inline Operator partial_transpose(const Operator& op, std::span<const int> subset) {
  return {op.space, partial_transpose(op.space, op.mat, subset)};
}
inline Operator partial_transpose(const Operator& op, std::initializer_list<int> subset) {
  return partial_transpose(op, std::span<const int>(subset.begin(), subset.size()));
}

/// Both sides of <A>_{rho^pt} = <A^pt>_rho; they agree to ~1e-12.
inline std::pair<Complex, Complex> pt_duality(const Operator& x, const QuantumState& state,
                                              std::span<const int> subset) {
  if (!(x.space == state.space()))
    throw std::invalid_argument("operator and state live on different spaces");
  const Matrix rho_pt = partial_transpose(state.space(), state.to_density(), subset);
  const Complex lhs = (rho_pt.transpose().cwiseProduct(x.mat)).sum();
  const Complex rhs = state.expectation(partial_transpose(state.space(), x.mat, subset));
  return {lhs, rhs};
}

struct IdentityCheck {
  std::string name;
  double deviation;
};

struct IdentityReport {
  std::string kind;
  std::vector<IdentityCheck> checks;

  double max_deviation() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.deviation);
    return m;
  }
  bool all_within(double tol) const { return max_deviation() <= tol; }
};

/// Max |diff| over entries whose row and column both survive the (diagonal
/// 0/1) projector; equal to the max-abs entry of P diff P without the two
/// matrix products.
inline double guarded_deviation(const Operator& projector, const Matrix& diff) {
  std::vector<Index> keep;
  for (Index i = 0; i < projector.mat.rows(); ++i)
    if (projector.mat(i, i) != Complex(0.0, 0.0)) keep.push_back(i);
  double dev = 0.0;
  for (Index i : keep)
    for (Index j : keep) dev = std::max(dev, std::abs(diff(i, j)));
  return dev;
}

namespace detail {

inline double sandwiched_dev(const Operator& p, const Matrix& diff) {
  return guarded_deviation(p, diff);
}

}  // namespace detail

/// PT and commutation identities for the n-mode bosonic families, with the
/// square identities guarded by a degree-`degree` safe projector.
inline IdentityReport verify_boson_identities(int n_modes, int cutoff, int degree = 2) {
  if (n_modes < 2) throw std::invalid_argument("boson identities need >= 2 modes");
  CompositeSpace space(std::vector<ModeSpec>(static_cast<std::size_t>(n_modes),
                                             ModeSpec::boson(cutoff)));
  const int target = n_modes - 1;
  const auto l = boson_l_family(space, target);
  const auto h = boson_h_family(space);
  const auto aux = boson_aux_ops(space, target);
  const Operator p = safe_projector(space, degree);
  const std::vector<int> subset{target};
  auto pt = [&](const Operator& o) { return partial_transpose(o, subset); };
  const Operator id = identity_op(space);

  IdentityReport rep{"boson" + std::to_string(n_modes), {}};
  auto add = [&](const std::string& name, double dev) { rep.checks.push_back({name, dev}); };

  // Shared products; every remaining check is O(dim^2).
  const Matrix hx2 = h.x.mat * h.x.mat, hy2 = h.y.mat * h.y.mat;
  const Matrix lx2 = l.x.mat * l.x.mat, ly2 = l.y.mat * l.y.mat;
  const Matrix hxhy = h.x.mat * h.y.mat, hyhx = h.y.mat * h.x.mat;
  const Matrix lxly = l.x.mat * l.y.mat, lylx = l.y.mat * l.x.mat;

  add("Hx_pt_eq_Lx", (pt(h.x).mat - l.x.mat).cwiseAbs().maxCoeff());
  add("Hy_pt_eq_Ly", (pt(h.y).mat - l.y.mat).cwiseAbs().maxCoeff());
  add("Hz_pt_invariant", (pt(h.z).mat - h.z.mat).cwiseAbs().maxCoeff());
  add("Lz_pt_invariant", (pt(l.z).mat - l.z.mat).cwiseAbs().maxCoeff());
  add("Hx2_pt_eq_Lx2_plus_corr",
      guarded_deviation(p, partial_transpose(space, hx2, subset) - lx2 -
                               0.25 * aux.correction.mat));
  add("Hy2_pt_eq_Ly2_plus_corr",
      guarded_deviation(p, partial_transpose(space, hy2, subset) - ly2 -
                               0.25 * aux.correction.mat));
  add("acomm_H_pt_eq_acomm_L",
      guarded_deviation(p, partial_transpose(space, (hxhy + hyhx).eval(), subset) -
                               (lxly + lylx)));
  add("comm_Lx_Ly_eq_iLz", guarded_deviation(p, lxly - lylx - Complex(0, 1) * l.z.mat));
  add("comm_Hx_Hy_eq_iHz", guarded_deviation(p, hxhy - hyhx - Complex(0, 1) * h.z.mat));
  add("Hz_eq_minus_half_total_gap",
      (h.z.mat + 0.5 * aux.total_gap.mat).cwiseAbs().maxCoeff());
  if (n_modes == 3) {
    const Operator nab1 = embedded_number(space, 0) + embedded_number(space, 1) + id;
    add("correction_eq_Na_plus_Nb_plus_1", (aux.correction.mat - nab1.mat).cwiseAbs().maxCoeff());
    const Operator mn1 = aux.m_plus + aux.n_plus + id;
    add("total_gap_eq_Mplus_Nplus_1", (aux.total_gap.mat - mn1.mat).cwiseAbs().maxCoeff());
  }
  return rep;
}

/// SU(2) identities are exact on the full (finite) space; no projector.
inline IdentityReport verify_su2_identities(int two_j) {
  CompositeSpace space({ModeSpec::spin(two_j), ModeSpec::spin(two_j), ModeSpec::spin(two_j)});
  const auto fam = su2_families(space);
  const std::vector<int> subset{2};
  auto pt = [&](const Operator& o) { return partial_transpose(o, subset); };

  IdentityReport rep{"su2", {}};
  auto add = [&](const std::string& name, double dev) { rep.checks.push_back({name, dev}); };
  const Matrix ax2 = fam.a.x.mat * fam.a.x.mat, ay2 = fam.a.y.mat * fam.a.y.mat;
  const Matrix bx2 = fam.b.x.mat * fam.b.x.mat, by2 = fam.b.y.mat * fam.b.y.mat;
  const Matrix axay = fam.a.x.mat * fam.a.y.mat, ayax = fam.a.y.mat * fam.a.x.mat;
  const Matrix bxby = fam.b.x.mat * fam.b.y.mat, bybx = fam.b.y.mat * fam.b.x.mat;
  add("Bx_pt_eq_Ax", (pt(fam.b.x).mat - fam.a.x.mat).cwiseAbs().maxCoeff());
  add("By_pt_eq_Ay", (pt(fam.b.y).mat - fam.a.y.mat).cwiseAbs().maxCoeff());
  add("Bz_pt_invariant", (pt(fam.b.z).mat - fam.b.z.mat).cwiseAbs().maxCoeff());
  add("Az_pt_invariant", (pt(fam.a.z).mat - fam.a.z.mat).cwiseAbs().maxCoeff());
  add("Bx2_pt_eq_Ax2_plus_E4",
      (partial_transpose(space, bx2, subset) - ax2 - 0.25 * fam.e.mat).cwiseAbs().maxCoeff());
  add("By2_pt_eq_Ay2_plus_E4",
      (partial_transpose(space, by2, subset) - ay2 - 0.25 * fam.e.mat).cwiseAbs().maxCoeff());
  add("acomm_B_pt_eq_acomm_A",
      (partial_transpose(space, (bxby + bybx).eval(), subset) - (axay + ayax))
          .cwiseAbs()
          .maxCoeff());
  add("comm_Ax_Ay_eq_iAz",
      (axay - ayax - Complex(0, 1) * fam.a.z.mat).cwiseAbs().maxCoeff());
  add("comm_Bx_By_eq_iBz",
      (bxby - bybx - Complex(0, 1) * fam.b.z.mat).cwiseAbs().maxCoeff());
  return rep;
}

inline IdentityReport verify_su11_identities(int two_k, int cutoff, int degree = 2) {
  CompositeSpace space({ModeSpec::su11(two_k, cutoff), ModeSpec::su11(two_k, cutoff),
                        ModeSpec::su11(two_k, cutoff)});
  const auto fam = su11_families(space);
  const Operator p = safe_projector(space, degree);
  const std::vector<int> subset{2};
  auto pt = [&](const Operator& o) { return partial_transpose(o, subset); };

  IdentityReport rep{"su11", {}};
  auto add = [&](const std::string& name, double dev) { rep.checks.push_back({name, dev}); };
  const Matrix cx2 = fam.c.x.mat * fam.c.x.mat, cy2 = fam.c.y.mat * fam.c.y.mat;
  const Matrix dx2 = fam.d.x.mat * fam.d.x.mat, dy2 = fam.d.y.mat * fam.d.y.mat;
  const Matrix cxcy = fam.c.x.mat * fam.c.y.mat, cycx = fam.c.y.mat * fam.c.x.mat;
  const Matrix dxdy = fam.d.x.mat * fam.d.y.mat, dydx = fam.d.y.mat * fam.d.x.mat;
  add("Dx_pt_eq_Cx", guarded_deviation(p, pt(fam.d.x).mat - fam.c.x.mat));
  add("Dy_pt_eq_Cy", guarded_deviation(p, pt(fam.d.y).mat - fam.c.y.mat));
  add("Dz_pt_invariant", (pt(fam.d.z).mat - fam.d.z.mat).cwiseAbs().maxCoeff());
  add("Cz_pt_invariant", (pt(fam.c.z).mat - fam.c.z.mat).cwiseAbs().maxCoeff());
  add("Dx2_pt_eq_Cx2_plus_F4",
      guarded_deviation(p, partial_transpose(space, dx2, subset) - cx2 - 0.25 * fam.f.mat));
  add("Dy2_pt_eq_Cy2_plus_F4",
      guarded_deviation(p, partial_transpose(space, dy2, subset) - cy2 - 0.25 * fam.f.mat));
  add("acomm_D_pt_eq_acomm_C",
      guarded_deviation(p, partial_transpose(space, (dxdy + dydx).eval(), subset) -
                               (cxcy + cycx)));
  add("comm_Cx_Cy_eq_iCz",
      guarded_deviation(p, cxcy - cycx - Complex(0, 1) * fam.c.z.mat));
  add("comm_Dx_Dy_eq_iDz",
      guarded_deviation(p, dxdy - dydx - Complex(0, 1) * fam.d.z.mat));
  return rep;
}

}  // namespace triwit
