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
// Composite operator families for one-mode-vs-rest entanglement criteria.
// The x/y members are built as ordered products of embedded ladder matrices;
// the z members and the auxiliary operators are diagonal polynomials in the
// level numbers, evaluated in exact integer arithmetic, so that commutation
// and partial-transpose identities hold without accumulating rounding error.

#pragma once

#include <cmath>
#include <vector>

#include "triwit/ops.hpp"
#include "triwit/space.hpp"

namespace triwit {

struct OperatorTriple {
  Operator x, y, z;
};

namespace detail {

inline void require_all_kind(const CompositeSpace& space, ModeKind kind, const char* what) {
  if (!space.all_kind(kind))
    throw std::invalid_argument(std::string(what) + " requires all modes of kind " +
                                to_string(kind));
}

inline void require_target(const CompositeSpace& space, int target) {
  if (target < 0 || target >= space.mode_count())
    throw std::invalid_argument("target mode index out of range");
}

// Ordered product: raising on every mode except `target` (ascending), then
// lowering on `target`. The x/y family members are built from this product
// and its adjoint.
inline Operator cross_ladder(const CompositeSpace& space, int target) {
  std::vector<int> rest;
  for (int i = 0; i < space.mode_count(); ++i)
    if (i != target) rest.push_back(i);
  Operator prod = embedded_raise(space, rest.front());
  for (std::size_t k = 1; k < rest.size(); ++k)
    prod = prod * embedded_raise(space, rest[k]);
  return prod * embedded_lower(space, target);
}

// Ordered product of raising operators on all modes.
inline Operator full_raise(const CompositeSpace& space) {
  Operator prod = embedded_raise(space, 0);
  for (int i = 1; i < space.mode_count(); ++i) prod = prod * embedded_raise(space, i);
  return prod;
}

inline OperatorTriple xy_from_ladder(const Operator& plus, Operator z) {
  const Operator minus = adjoint(plus);
  Operator x = 0.5 * (plus + minus);
  Operator y = Complex(0.0, -0.5) * (plus - minus);
  return {std::move(x), std::move(y), std::move(z)};
}

}  // namespace detail

/// L-family for an all-boson space: L_+ = prod_{i != t} a_i^dag . a_t,
/// L_z = (1/2)[(N_t+1) prod N_i - N_t prod (N_i+1)].
/// [L_x,L_y] = i L_z on the safe-projected subspace.
inline OperatorTriple boson_l_family(const CompositeSpace& space, int target) {
  detail::require_all_kind(space, ModeKind::Boson, "boson L family");
  if (space.mode_count() < 2) throw std::invalid_argument("boson L family needs >= 2 modes");
  detail::require_target(space, target);
  Operator z = diagonal_op(space, [&](const std::vector<int>& occ) {
    double with_rest = 1.0, with_rest1 = 1.0;
    for (int i = 0; i < space.mode_count(); ++i) {
      if (i == target) continue;
      with_rest *= occ[static_cast<std::size_t>(i)];
      with_rest1 *= occ[static_cast<std::size_t>(i)] + 1.0;
    }
    const double nt = occ[static_cast<std::size_t>(target)];
    return Complex(0.5 * ((nt + 1.0) * with_rest - nt * with_rest1), 0.0);
  });
  return detail::xy_from_ladder(detail::cross_ladder(space, target), std::move(z));
}

/// H-family: H_+ = prod_i a_i^dag, H_z = (1/2)[prod N_i - prod (N_i+1)].
inline OperatorTriple boson_h_family(const CompositeSpace& space) {
  detail::require_all_kind(space, ModeKind::Boson, "boson H family");
  if (space.mode_count() < 2) throw std::invalid_argument("boson H family needs >= 2 modes");
  Operator z = diagonal_op(space, [&](const std::vector<int>& occ) {
    double all = 1.0, all1 = 1.0;
    for (int i = 0; i < space.mode_count(); ++i) {
      all *= occ[static_cast<std::size_t>(i)];
      all1 *= occ[static_cast<std::size_t>(i)] + 1.0;
    }
    return Complex(0.5 * (all - all1), 0.0);
  });
  return detail::xy_from_ladder(detail::full_raise(space), std::move(z));
}

/// Diagonal auxiliaries for the bosonic criteria. `correction` and
/// `total_gap` are the products-of-(N+1) minus products-of-N gaps over the
/// non-target modes and over all modes; for three modes total_gap equals
/// M_+ + N_+ + 1 exactly and correction equals N_a + N_b + 1 exactly.
struct BosonAux {
  Operator m_plus;      // sum over pairs N_i N_j
  Operator n_plus;      // sum over modes N_i
  Operator correction;  // prod_{i != t}(N_i+1) - prod_{i != t} N_i
  Operator total_gap;   // prod_i (N_i+1) - prod_i N_i
};

inline BosonAux boson_aux_ops(const CompositeSpace& space, int target) {
  detail::require_all_kind(space, ModeKind::Boson, "boson auxiliaries");
  detail::require_target(space, target);
  const int n = space.mode_count();
  Operator m_plus = diagonal_op(space, [&](const std::vector<int>& occ) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        sum += static_cast<double>(occ[static_cast<std::size_t>(i)]) *
               occ[static_cast<std::size_t>(j)];
    return Complex(sum, 0.0);
  });
  Operator n_plus = diagonal_op(space, [&](const std::vector<int>& occ) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += occ[static_cast<std::size_t>(i)];
    return Complex(sum, 0.0);
  });
  Operator correction = diagonal_op(space, [&](const std::vector<int>& occ) {
    double prod = 1.0, prod1 = 1.0;
    for (int i = 0; i < n; ++i) {
      if (i == target) continue;
      prod *= occ[static_cast<std::size_t>(i)];
      prod1 *= occ[static_cast<std::size_t>(i)] + 1.0;
    }
    return Complex(prod1 - prod, 0.0);
  });
  Operator total_gap = diagonal_op(space, [&](const std::vector<int>& occ) {
    double prod = 1.0, prod1 = 1.0;
    for (int i = 0; i < n; ++i) {
      prod *= occ[static_cast<std::size_t>(i)];
      prod1 *= occ[static_cast<std::size_t>(i)] + 1.0;
    }
    return Complex(prod1 - prod, 0.0);
  });
  return {std::move(m_plus), std::move(n_plus), std::move(correction), std::move(total_gap)};
}

/// SU(2) tripartite families. A couples modes a,b up and mode c down; B
/// raises all three. E is the diagonal correction appearing in
/// (B_x^2)^T3 = A_x^2 + E/4. All members are exact on the full space.
struct Su2Family {
  OperatorTriple a, b;
  Operator e;
};

inline Su2Family su2_families(const CompositeSpace& space) {
  detail::require_all_kind(space, ModeKind::Spin, "su2 families");
  if (space.mode_count() != 3) throw std::invalid_argument("su2 families need exactly 3 modes");
  const int ta = space.mode(0).two_jk, tb = space.mode(1).two_jk, tc = space.mode(2).two_jk;

  OperatorTriple a = detail::xy_from_ladder(
      detail::cross_ladder(space, 2), diagonal_op(space, [&](const std::vector<int>& occ) {
        const double na = occ[0], nb = occ[1], nc = occ[2];
        return Complex(0.5 * (na * nb * (nc + 1) * (ta - na + 1) * (tb - nb + 1) * (tc - nc) -
                              (na + 1) * (nb + 1) * nc * (ta - na) * (tb - nb) * (tc - nc + 1)),
                       0.0);
      }));
  OperatorTriple b = detail::xy_from_ladder(
      detail::full_raise(space), diagonal_op(space, [&](const std::vector<int>& occ) {
        const double na = occ[0], nb = occ[1], nc = occ[2];
        return Complex(
            0.5 * (na * nb * nc * (ta - na + 1) * (tb - nb + 1) * (tc - nc + 1) -
                   (na + 1) * (nb + 1) * (nc + 1) * (ta - na) * (tb - nb) * (tc - nc)),
            0.0);
      }));
  // 2(N_c - j_c) = 2 N_c - 2j_c keeps the evaluation in exact integers.
  Operator e = diagonal_op(space, [&](const std::vector<int>& occ) {
    const double na = occ[0], nb = occ[1], nc = occ[2];
    return Complex((2.0 * nc - tc) * (na * nb * (ta - na + 1) * (tb - nb + 1) -
                                      (na + 1) * (nb + 1) * (ta - na) * (tb - nb)),
                   0.0);
  });
  return {std::move(a), std::move(b), std::move(e)};
}

/// SU(1,1) tripartite families, the hyperbolic analog of the SU(2) case.
/// K_+ is unbounded, so commutation and PT identities hold on the
/// safe-projected subspace only.
struct Su11Family {
  OperatorTriple c, d;
  Operator f;
};

inline Su11Family su11_families(const CompositeSpace& space) {
  detail::require_all_kind(space, ModeKind::SU11, "su11 families");
  if (space.mode_count() != 3) throw std::invalid_argument("su11 families need exactly 3 modes");
  const int ta = space.mode(0).two_jk, tb = space.mode(1).two_jk, tc = space.mode(2).two_jk;

  OperatorTriple c = detail::xy_from_ladder(
      detail::cross_ladder(space, 2), diagonal_op(space, [&](const std::vector<int>& occ) {
        const double ma = occ[0], mb = occ[1], mc = occ[2];
        return Complex(0.5 * (ma * mb * (mc + 1) * (ta + ma - 1) * (tb + mb - 1) * (tc + mc) -
                              (ma + 1) * (mb + 1) * mc * (ta + ma) * (tb + mb) * (tc + mc - 1)),
                       0.0);
      }));
  OperatorTriple d = detail::xy_from_ladder(
      detail::full_raise(space), diagonal_op(space, [&](const std::vector<int>& occ) {
        const double ma = occ[0], mb = occ[1], mc = occ[2];
        return Complex(
            0.5 * (ma * mb * mc * (ta + ma - 1) * (tb + mb - 1) * (tc + mc - 1) -
                   (ma + 1) * (mb + 1) * (mc + 1) * (ta + ma) * (tb + mb) * (tc + mc)),
            0.0);
      }));
  Operator f = diagonal_op(space, [&](const std::vector<int>& occ) {
    const double ma = occ[0], mb = occ[1], mc = occ[2];
    return Complex((2.0 * mc + tc) * ((ma + 1) * (mb + 1) * (ta + ma) * (tb + mb) -
                                      ma * mb * (ta + ma - 1) * (tb + mb - 1)),
                   0.0);
  });
  return {std::move(c), std::move(d), std::move(f)};
}

/// Two-mode EPR-type pair u = |a| x1 + (1/a) x2, v = |a| p1 - (1/a) p2 with
/// the separability bound a^2 + 1/a^2.
struct DuanPair {
  Operator u, v;
  double bound;
};

inline DuanPair duan_pair(const CompositeSpace& space, double a_param) {
  detail::require_all_kind(space, ModeKind::Boson, "duan pair");
  if (space.mode_count() != 2) throw std::invalid_argument("duan pair needs exactly 2 modes");
  if (a_param == 0.0) throw std::invalid_argument("duan pair needs a != 0");
  const auto [x1, p1] = quadratures(space.mode(0));
  const auto [x2, p2] = quadratures(space.mode(1));
  const double aa = std::abs(a_param);
  const double inv = 1.0 / a_param;
  Operator u = aa * embed(x1, 0, space) + inv * embed(x2, 1, space);
  Operator v = aa * embed(p1, 0, space) - inv * embed(p2, 1, space);
  return {std::move(u), std::move(v), a_param * a_param + 1.0 / (a_param * a_param)};
}

}  // namespace triwit
