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
// Moment computation and the separability criteria. Every criterion returns
// a CriterionReport with margin = lhs - rhs; a margin below -tolerance
// certifies entanglement, a non-negative margin is inconclusive.

#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "triwit/families.hpp"
#include "triwit/ops.hpp"
#include "triwit/ptrans.hpp"
#include "triwit/space.hpp"
#include "triwit/states.hpp"

namespace triwit {

inline constexpr double kDetectionTolerance = 1e-9;

enum class Verdict { Detected, NotDetected };

inline const char* to_string(Verdict v) {
  return v == Verdict::Detected ? "detected" : "not_detected";
}

struct CriterionReport {
  std::string criterion_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = kDetectionTolerance;
  Verdict verdict = Verdict::NotDetected;
  std::map<std::string, double> moments;
  bool variance_clamped = false;  // a tiny negative variance was reported as 0
};

namespace detail {

inline void require_normalized(const QuantumState& state) {
  if (state.norm_error() > 1e-12) throw std::invalid_argument("state is not normalized");
}

inline void require_hermitian(const Operator& op, const char* what) {
  if (hermiticity_error(op.mat) > 1e-12)
    throw std::invalid_argument(std::string(what) + " must be Hermitian");
}

// Variances in [-1e-12, 0) are rounding noise and are reported as 0; more
// negative values indicate a real computational problem.
inline double clamp_variance(double v, bool& flagged) {
  if (v >= 0.0) return v;
  if (v < -1e-12) throw std::runtime_error("variance below -1e-12; computational error");
  flagged = true;
  return 0.0;
}

}  // namespace detail

inline Complex expectation(const Operator& x, const QuantumState& state) {
  if (!(x.space == state.space()))
    throw std::invalid_argument("operator and state live on different spaces");
  detail::require_normalized(state);
  return state.expectation(x.mat);
}

inline double variance(const Operator& x, const QuantumState& state) {
  detail::require_hermitian(x, "variance operand");
  const double mean = expectation(x, state).real();
  const double second = state.expectation((x.mat * x.mat).eval()).real();
  bool flagged = false;
  return detail::clamp_variance(second - mean * mean, flagged);
}

/// Cov(A,B) = <(AB+BA)/2> - <A><B>, symmetric in its arguments.
inline double covariance(const Operator& a, const Operator& b, const QuantumState& state) {
  detail::require_hermitian(a, "covariance operand");
  detail::require_hermitian(b, "covariance operand");
  require_same_space(a, b);
  const double ma = expectation(a, state).real();
  const double mb = state.expectation(b.mat).real();
  const double sym = state.expectation((0.5 * (a.mat * b.mat + b.mat * a.mat)).eval()).real();
  return sym - ma * mb;
}

/// Base class for criteria: precomputed operator content, evaluated per
/// state. Immutable after construction; safe to evaluate concurrently.
class Criterion {
 public:
  virtual ~Criterion() = default;
  virtual std::string id() const = 0;
  virtual const CompositeSpace& space() const = 0;
  virtual CriterionReport evaluate(const QuantumState& state) const = 0;

  double tolerance() const { return tol_; }
  void set_tolerance(double t) { tol_ = t; }

 protected:
  CriterionReport finish(std::string id, double lhs, double rhs,
                         std::map<std::string, double> moments, bool clamped) const {
    CriterionReport r;
    r.criterion_id = std::move(id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = lhs - rhs;
    r.tolerance = tol_;
    r.verdict = (r.margin < -tol_) ? Verdict::Detected : Verdict::NotDetected;
    r.moments = std::move(moments);
    r.variance_clamped = clamped;
    return r;
  }

  void check_state(const QuantumState& state) const {
    if (!(state.space() == space()))
      throw std::invalid_argument("state space does not match criterion space");
    detail::require_normalized(state);
  }

  double tol_ = kDetectionTolerance;
};

/// Var(A)Var(B) >= |<C>|^2/4 + Cov(A,B)^2 with [A,B] = iC. Valid for every
/// physical state, not only separable ones.
class SrirCriterion : public Criterion {
 public:
  SrirCriterion(const Operator& a, const Operator& b, const Operator& c) : space_(a.space) {
    require_same_space(a, b);
    require_same_space(a, c);
    detail::require_hermitian(a, "SRIR operand A");
    detail::require_hermitian(b, "SRIR operand B");
    a_ = a.mat;
    b_ = b.mat;
    c_ = c.mat;
    a2_ = a.mat * a.mat;
    b2_ = b.mat * b.mat;
    sym_ = 0.5 * (a.mat * b.mat + b.mat * a.mat);
  }

  std::string id() const override { return "srir"; }
  const CompositeSpace& space() const override { return space_; }

  CriterionReport evaluate(const QuantumState& state) const override {
    check_state(state);
    bool clamped = false;
    const double ma = state.expectation(a_).real();
    const double mb = state.expectation(b_).real();
    const double va = detail::clamp_variance(state.expectation(a2_).real() - ma * ma, clamped);
    const double vb = detail::clamp_variance(state.expectation(b2_).real() - mb * mb, clamped);
    const Complex mc = state.expectation(c_);
    const double cov = state.expectation(sym_).real() - ma * mb;
    const double lhs = va * vb;
    const double rhs = 0.25 * std::norm(mc) + cov * cov;
    return finish(id(), lhs, rhs,
                  {{"var_a", va},
                   {"var_b", vb},
                   {"mean_a", ma},
                   {"mean_b", mb},
                   {"mean_c_re", mc.real()},
                   {"mean_c_im", mc.imag()},
                   {"cov_ab", cov}},
                  clamped);
  }

 private:
  CompositeSpace space_;
  Matrix a_, b_, c_, a2_, b2_, sym_;
};

/// The product-form criterion: the SRIR written with partial transposition
/// moved from the state onto the operators. All transposed moments are taken
/// at the matrix level. The "variance-like" terms may be negative for
/// entangled states; that is the signal, so they are not clamped.
class PtProductCriterion : public Criterion {
 public:
  PtProductCriterion(const Operator& a, const Operator& b, const Operator& c,
                     std::vector<int> subset, bool verify_comm = true, int guard_degree = 2)
      : space_(a.space), subset_(std::move(subset)) {
    require_same_space(a, b);
    require_same_space(a, c);
    detail::require_hermitian(a, "operand A");
    detail::require_hermitian(b, "operand B");
    if (verify_comm) {
      const Operator p = safe_projector(space_, guard_degrees(space_, guard_degree));
      const double dev =
          detail::sandwiched_dev(p, commutator(a, b).mat - Complex(0, 1) * c.mat);
      if (dev > 1e-10)
        throw std::invalid_argument("[A,B] = iC fails on the guarded subspace (deviation " +
                                    std::to_string(dev) + ")");
    }
    auto pt = [&](const Matrix& m) { return partial_transpose(space_, m, subset_); };
    a_pt_ = pt(a.mat);
    b_pt_ = pt(b.mat);
    c_pt_ = pt(c.mat);
    a2_pt_ = pt((a.mat * a.mat).eval());
    b2_pt_ = pt((b.mat * b.mat).eval());
    sym_pt_ = pt((0.5 * (a.mat * b.mat + b.mat * a.mat)).eval());
  }

  std::string id() const override { return "pt_product"; }
  const CompositeSpace& space() const override { return space_; }

  CriterionReport evaluate(const QuantumState& state) const override {
    check_state(state);
    const double ma = state.expectation(a_pt_).real();
    const double mb = state.expectation(b_pt_).real();
    const double va = state.expectation(a2_pt_).real() - ma * ma;
    const double vb = state.expectation(b2_pt_).real() - mb * mb;
    const Complex mc = state.expectation(c_pt_);
    const double cov = state.expectation(sym_pt_).real() - ma * mb;
    const double lhs = va * vb;
    const double rhs = 0.25 * std::norm(mc) + cov * cov;
    return finish(id(), lhs, rhs,
                  {{"var_pt_a", va},
                   {"var_pt_b", vb},
                   {"mean_pt_a", ma},
                   {"mean_pt_b", mb},
                   {"mean_pt_c_re", mc.real()},
                   {"mean_pt_c_im", mc.imag()},
                   {"cov_pt", cov}},
                  false);
  }

 private:
  CompositeSpace space_;
  std::vector<int> subset_;
  Matrix a_pt_, b_pt_, c_pt_, a2_pt_, b2_pt_, sym_pt_;
};

/// The sum-form criterion with weight c = sqrt(beta/alpha) > 0.
class PtSumCriterion : public Criterion {
 public:
  PtSumCriterion(const Operator& a, const Operator& b, const Operator& c, double c_param,
                 std::vector<int> subset, bool verify_comm = true, int guard_degree = 2)
      : product_(a, b, c, std::move(subset), verify_comm, guard_degree), c_param_(c_param) {
    if (c_param <= 0.0) throw std::invalid_argument("sum criterion needs c > 0");
  }

  std::string id() const override { return "pt_sum"; }
  const CompositeSpace& space() const override { return product_.space(); }

  CriterionReport evaluate(const QuantumState& state) const override {
    CriterionReport base = product_.evaluate(state);
    const double va = base.moments.at("var_pt_a");
    const double vb = base.moments.at("var_pt_b");
    const double c2 = std::norm(Complex(base.moments.at("mean_pt_c_re"),
                                        base.moments.at("mean_pt_c_im")));
    const double cov = base.moments.at("cov_pt");
    const double lhs = va + c_param_ * c_param_ * vb;
    const double rhs = c_param_ * std::sqrt(c2 + 4.0 * cov * cov);
    auto moments = base.moments;
    moments["c"] = c_param_;
    CriterionReport r = finish(id(), lhs, rhs, std::move(moments), base.variance_clamped);
    r.tolerance = tolerance();
    r.verdict = (r.margin < -tolerance()) ? Verdict::Detected : Verdict::NotDetected;
    return r;
  }

 private:
  PtProductCriterion product_;
  double c_param_;
};

namespace detail {

// Shared operator content of the bosonic one-vs-rest criteria.
struct BosonBundle {
  Matrix lx, ly, lx2, ly2, sym;  // sym = (LxLy + LyLx)/2
  Matrix correction, total_gap, m_plus, n_plus, n_last;

  BosonBundle(const CompositeSpace& space, int target) {
    const auto l = boson_l_family(space, target);
    auto aux = boson_aux_ops(space, target);
    lx = l.x.mat;
    ly = l.y.mat;
    lx2 = lx * lx;
    ly2 = ly * ly;
    sym = 0.5 * (lx * ly + ly * lx);
    correction = std::move(aux.correction.mat);
    total_gap = std::move(aux.total_gap.mat);
    m_plus = std::move(aux.m_plus.mat);
    n_plus = std::move(aux.n_plus.mat);
    n_last = embedded_number(space, target).mat;
  }

  struct Moments {
    double var_lx, var_ly, mean_lx, mean_ly, corr, gap, m_plus, n_plus, n_last, cov;
    bool clamped;
  };

  Moments moments(const QuantumState& state) const {
    Moments m{};
    m.clamped = false;
    m.mean_lx = state.expectation(lx).real();
    m.mean_ly = state.expectation(ly).real();
    m.var_lx = clamp_variance(state.expectation(lx2).real() - m.mean_lx * m.mean_lx,
                              m.clamped);
    m.var_ly = clamp_variance(state.expectation(ly2).real() - m.mean_ly * m.mean_ly,
                              m.clamped);
    m.corr = state.expectation(correction).real();
    m.gap = state.expectation(total_gap).real();
    m.m_plus = state.expectation(m_plus).real();
    m.n_plus = state.expectation(n_plus).real();
    m.n_last = state.expectation(n_last).real();
    m.cov = state.expectation(sym).real() - m.mean_lx * m.mean_ly;
    return m;
  }
};

inline CompositeSpace require_boson_modes(const CompositeSpace& space, int count,
                                          const char* what) {
  if (!space.all_kind(ModeKind::Boson) ||
      (count > 0 && space.mode_count() != count) || (count == 0 && space.mode_count() < 3))
    throw std::invalid_argument(std::string(what) + ": wrong space kind or mode count");
  return space;
}

}  // namespace detail

/// Tripartite bosonic product criterion:
/// [Var(Lx) + <Na+Nb+1>/4][Var(Ly) + <Na+Nb+1>/4]
///   >= [<M+> + <N+> + 1]^2/16 + Cov(Lx,Ly)^2.
class Boson3ProductCriterion : public Criterion {
 public:
  explicit Boson3ProductCriterion(const CompositeSpace& space)
      : space_(detail::require_boson_modes(space, 3, "boson3_product")), bundle_(space_, 2) {}

  std::string id() const override { return "boson3_product"; }
  const CompositeSpace& space() const override { return space_; }

  CriterionReport evaluate(const QuantumState& state) const override {
    check_state(state);
    const auto m = bundle_.moments(state);
    const double lhs_x = m.var_lx + 0.25 * m.corr;
    const double lhs_y = m.var_ly + 0.25 * m.corr;
    const double lhs = lhs_x * lhs_y;
    const double rhs = m.gap * m.gap / 16.0 + m.cov * m.cov;
    return finish(id(), lhs, rhs,
                  {{"var_lx", m.var_lx},
                   {"var_ly", m.var_ly},
                   {"mean_lx", m.mean_lx},
                   {"mean_ly", m.mean_ly},
                   {"n_ab_plus_1", m.corr},
                   {"m_plus", m.m_plus},
                   {"n_plus", m.n_plus},
                   {"total_gap", m.gap},
                   {"cov_lxly", m.cov},
                   {"lhs_x", lhs_x},
                   {"lhs_y", lhs_y}},
                  m.clamped);
  }

 private:
  CompositeSpace space_;
  detail::BosonBundle bundle_;
};

/// Tripartite bosonic sum criterion with weight c:
/// Var(Lx) + c^2 Var(Ly) + (1+c^2)/4 <Na+Nb+1>
///   >= c sqrt([<M+>+<N+>+1]^2/4 + 4 Cov^2).
/// At c = 1 this is the rearranged single-sum inequality.
class Boson3SumCriterion : public Criterion {
 public:
  Boson3SumCriterion(const CompositeSpace& space, double c_param)
      : space_(detail::require_boson_modes(space, 3, "boson3_sum")),
        bundle_(space_, 2),
        c_(c_param) {
    if (c_param <= 0.0) throw std::invalid_argument("boson3_sum needs c > 0");
  }

  std::string id() const override { return "boson3_sum"; }
  const CompositeSpace& space() const override { return space_; }

  CriterionReport evaluate(const QuantumState& state) const override {
    check_state(state);
    const auto m = bundle_.moments(state);
    const double lhs = m.var_lx + c_ * c_ * m.var_ly + 0.25 * (1.0 + c_ * c_) * m.corr;
    const double sqrt_term = std::sqrt(m.gap * m.gap / 4.0 + 4.0 * m.cov * m.cov);
    const double rhs = c_ * sqrt_term;
    return finish(id(), lhs, rhs,
                  {{"var_lx", m.var_lx},
                   {"var_ly", m.var_ly},
                   {"n_ab_plus_1", m.corr},
                   {"m_plus", m.m_plus},
                   {"n_plus", m.n_plus},
                   {"total_gap", m.gap},
                   {"cov_lxly", m.cov},
                   {"sqrt_term", sqrt_term},
                   {"c", c_}},
                  m.clamped);
  }

 private:
  CompositeSpace space_;
  detail::BosonBundle bundle_;
  double c_;
};

/// The Heisenberg-only special case: Var(Lx) + Var(Ly) >= <M+ + Nc>/2.
/// The moments include both this bound (rhs_c2) and the stronger c = 1
/// sum-form bound (rhs_c1), which dominates it for every state.
class Boson3HurCriterion : public Criterion {
 public:
  explicit Boson3HurCriterion(const CompositeSpace& space)
      : space_(detail::require_boson_modes(space, 3, "boson3_hur")), bundle_(space_, 2) {}

  std::string id() const override { return "boson3_hur"; }
  const CompositeSpace& space() const override { return space_; }

  CriterionReport evaluate(const QuantumState& state) const override {
    check_state(state);
    const auto m = bundle_.moments(state);
    const double lhs = m.var_lx + m.var_ly;
    const double rhs = 0.5 * (m.m_plus + m.n_last);
    const double rhs_c1 =
        std::sqrt(m.gap * m.gap / 4.0 + 4.0 * m.cov * m.cov) - 0.5 * m.corr;
    return finish(id(), lhs, rhs,
                  {{"var_lx", m.var_lx},
                   {"var_ly", m.var_ly},
                   {"m_plus", m.m_plus},
                   {"n_c", m.n_last},
                   {"n_ab_plus_1", m.corr},
                   {"cov_lxly", m.cov},
                   {"rhs_c1", rhs_c1},
                   {"rhs_c2", rhs}},
                  m.clamped);
  }

 private:
  CompositeSpace space_;
  detail::BosonBundle bundle_;
};

/// Tripartite SU(2) criterion:
/// [Var(Ax) + <E>/4][Var(Ay) + <E>/4] >= |<Bz>|^2/4 + Cov(Ax,Ay)^2.
class Su2ProductCriterion : public Criterion {
 public:
  explicit Su2ProductCriterion(const CompositeSpace& space) : space_(space) {
    if (!space_.all_kind(ModeKind::Spin) || space_.mode_count() != 3)
      throw std::invalid_argument("su2_product needs exactly 3 spin modes");
    const auto fam = su2_families(space_);
    ax_ = fam.a.x.mat;
    ay_ = fam.a.y.mat;
    ax2_ = ax_ * ax_;
    ay2_ = ay_ * ay_;
    sym_ = 0.5 * (ax_ * ay_ + ay_ * ax_);
    e_ = fam.e.mat;
    bz_ = fam.b.z.mat;
  }

  std::string id() const override { return "su2_product"; }
  const CompositeSpace& space() const override { return space_; }

  CriterionReport evaluate(const QuantumState& state) const override {
    check_state(state);
    bool clamped = false;
    const double max_ = state.expectation(ax_).real();
    const double may = state.expectation(ay_).real();
    const double vax =
        detail::clamp_variance(state.expectation(ax2_).real() - max_ * max_, clamped);
    const double vay =
        detail::clamp_variance(state.expectation(ay2_).real() - may * may, clamped);
    const double me = state.expectation(e_).real();
    const double mbz = state.expectation(bz_).real();
    const double cov = state.expectation(sym_).real() - max_ * may;
    const double lhs_x = vax + 0.25 * me;
    const double lhs_y = vay + 0.25 * me;
    const double lhs = lhs_x * lhs_y;
    const double rhs = 0.25 * mbz * mbz + cov * cov;
    return finish(id(), lhs, rhs,
                  {{"var_ax", vax},
                   {"var_ay", vay},
                   {"mean_e", me},
                   {"mean_bz", mbz},
                   {"cov_axay", cov},
                   {"lhs_x", lhs_x},
                   {"lhs_y", lhs_y}},
                  clamped);
  }

 private:
  CompositeSpace space_;
  Matrix ax_, ay_, ax2_, ay2_, sym_, e_, bz_;
};

/// Tripartite SU(1,1) criterion:
/// [Var(Cx) + <F>/4][Var(Cy) + <F>/4] >= |<Dz>|^2/4 + Cov(Cx,Cy)^2.
class Su11ProductCriterion : public Criterion {
 public:
  explicit Su11ProductCriterion(const CompositeSpace& space) : space_(space) {
    if (!space_.all_kind(ModeKind::SU11) || space_.mode_count() != 3)
      throw std::invalid_argument("su11_product needs exactly 3 su11 modes");
    const auto fam = su11_families(space_);
    cx_ = fam.c.x.mat;
    cy_ = fam.c.y.mat;
    cx2_ = cx_ * cx_;
    cy2_ = cy_ * cy_;
    sym_ = 0.5 * (cx_ * cy_ + cy_ * cx_);
    f_ = fam.f.mat;
    dz_ = fam.d.z.mat;
  }

  std::string id() const override { return "su11_product"; }
  const CompositeSpace& space() const override { return space_; }

  CriterionReport evaluate(const QuantumState& state) const override {
    check_state(state);
    bool clamped = false;
    const double mcx = state.expectation(cx_).real();
    const double mcy = state.expectation(cy_).real();
    const double vcx =
        detail::clamp_variance(state.expectation(cx2_).real() - mcx * mcx, clamped);
    const double vcy =
        detail::clamp_variance(state.expectation(cy2_).real() - mcy * mcy, clamped);
    const double mf = state.expectation(f_).real();
    const double mdz = state.expectation(dz_).real();
    const double cov = state.expectation(sym_).real() - mcx * mcy;
    const double lhs = (vcx + 0.25 * mf) * (vcy + 0.25 * mf);
    const double rhs = 0.25 * mdz * mdz + cov * cov;
    return finish(id(), lhs, rhs,
                  {{"var_cx", vcx},
                   {"var_cy", vcy},
                   {"mean_f", mf},
                   {"mean_dz", mdz},
                   {"cov_cxcy", cov}},
                  clamped);
  }

 private:
  CompositeSpace space_;
  Matrix cx_, cy_, cx2_, cy2_, sym_, f_, dz_;
};

/// Two-mode EPR criterion: Var(u) + Var(v) >= a^2 + 1/a^2.
class DuanCriterion : public Criterion {
 public:
  DuanCriterion(const CompositeSpace& space, double a_param)
      : space_(space), a_param_(a_param) {
    const auto pair = duan_pair(space_, a_param);  // validates space and a != 0
    u_ = pair.u.mat;
    v_ = pair.v.mat;
    u2_ = u_ * u_;
    v2_ = v_ * v_;
    bound_ = pair.bound;
  }

  std::string id() const override { return "duan"; }
  const CompositeSpace& space() const override { return space_; }

  CriterionReport evaluate(const QuantumState& state) const override {
    check_state(state);
    bool clamped = false;
    const double mu = state.expectation(u_).real();
    const double mv = state.expectation(v_).real();
    const double vu =
        detail::clamp_variance(state.expectation(u2_).real() - mu * mu, clamped);
    const double vv =
        detail::clamp_variance(state.expectation(v2_).real() - mv * mv, clamped);
    return finish(id(), vu + vv, bound_,
                  {{"var_u", vu}, {"var_v", vv}, {"bound", bound_}, {"a", a_param_}},
                  clamped);
  }

 private:
  CompositeSpace space_;
  double a_param_;
  Matrix u_, v_, u2_, v2_;
  double bound_ = 0.0;
};

/// n-partite (n >= 3) generalization for last-mode-vs-rest entanglement:
/// [Var(Lx) + <corr>/4][Var(Ly) + <corr>/4]
///   >= <prod(N_i+1) - prod N_i>^2/16 + Cov^2,
/// with corr the same gap over the first n-1 modes. Coincides with the
/// tripartite criterion for n = 3.
class NmodeProductCriterion : public Criterion {
 public:
  explicit NmodeProductCriterion(const CompositeSpace& space)
      : space_(detail::require_boson_modes(space, 0, "nmode_product")),
        bundle_(space_, space_.mode_count() - 1) {}

  std::string id() const override { return "nmode_product"; }
  const CompositeSpace& space() const override { return space_; }

  CriterionReport evaluate(const QuantumState& state) const override {
    check_state(state);
    const auto m = bundle_.moments(state);
    const double lhs = (m.var_lx + 0.25 * m.corr) * (m.var_ly + 0.25 * m.corr);
    const double rhs = m.gap * m.gap / 16.0 + m.cov * m.cov;
    return finish(id(), lhs, rhs,
                  {{"var_lx", m.var_lx},
                   {"var_ly", m.var_ly},
                   {"correction", m.corr},
                   {"total_gap", m.gap},
                   {"cov_lxly", m.cov}},
                  m.clamped);
  }

 private:
  CompositeSpace space_;
  detail::BosonBundle bundle_;
};

// One-shot helpers mirroring the criterion classes.

inline CriterionReport srir_margin(const Operator& a, const Operator& b, const Operator& c,
                                   const QuantumState& state) {
  return SrirCriterion(a, b, c).evaluate(state);
}
inline CriterionReport pt_product_criterion(const Operator& a, const Operator& b,
                                            const Operator& c, const QuantumState& state,
                                            std::vector<int> subset, bool verify_comm = true) {
  return PtProductCriterion(a, b, c, std::move(subset), verify_comm).evaluate(state);
}
inline CriterionReport pt_sum_criterion(const Operator& a, const Operator& b, const Operator& c,
                                        double c_param, const QuantumState& state,
                                        std::vector<int> subset, bool verify_comm = true) {
  return PtSumCriterion(a, b, c, c_param, std::move(subset), verify_comm).evaluate(state);
}
inline CriterionReport boson_tripartite_product(const QuantumState& state) {
  return Boson3ProductCriterion(state.space()).evaluate(state);
}
inline CriterionReport boson_tripartite_sum(const QuantumState& state, double c_param) {
  return Boson3SumCriterion(state.space(), c_param).evaluate(state);
}
inline CriterionReport boson_tripartite_hur(const QuantumState& state) {
  return Boson3HurCriterion(state.space()).evaluate(state);
}
inline CriterionReport su2_criterion(const QuantumState& state) {
  return Su2ProductCriterion(state.space()).evaluate(state);
}
inline CriterionReport su11_criterion(const QuantumState& state) {
  return Su11ProductCriterion(state.space()).evaluate(state);
}
inline CriterionReport duan_criterion(const QuantumState& state, double a_param) {
  return DuanCriterion(state.space(), a_param).evaluate(state);
}
inline CriterionReport npartite_criterion(const QuantumState& state) {
  return NmodeProductCriterion(state.space()).evaluate(state);
}

}  // namespace triwit
