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
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "triwit/space.hpp"

namespace triwit {

/// Counter-based random stream: identical (seed, stream) pairs reproduce
/// identical samples and distinct stream indices give independent streams,
/// so parallel sampling keyed by sample index is deterministic.
///
/// The uniform and normal variates are generated from raw mt19937_64 output
/// (bit shift and Box-Muller) rather than std::*_distribution, whose output
/// is implementation-defined and would break cross-library reproducibility.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream), engine_(mix(seed + 0x9E3779B97F4A7C15ull * (stream + 1))) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  /// Complex with independent standard-normal real and imaginary parts.
  Complex normal_complex() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_, stream_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// A pure vector or density matrix bound to its space.
class QuantumState {
 public:
  static QuantumState pure(CompositeSpace space, Vector amplitudes) {
    if (amplitudes.size() != space.dim())
      throw std::invalid_argument("state vector length does not match space dimension");
    const double norm = amplitudes.norm();
    if (std::abs(norm - 1.0) > 1e-12)
      throw std::invalid_argument("pure state is not normalized");
    return QuantumState(std::move(space), std::move(amplitudes));
  }

  static QuantumState density(CompositeSpace space, Matrix rho, bool validate = true) {
    if (rho.rows() != space.dim() || rho.cols() != space.dim())
      throw std::invalid_argument("density matrix dimension does not match space");
    if (validate) {
      if (hermiticity_error(rho) > 1e-12)
        throw std::invalid_argument("density matrix is not Hermitian");
      if (std::abs(rho.trace().real() - 1.0) > 1e-12 || std::abs(rho.trace().imag()) > 1e-12)
        throw std::invalid_argument("density matrix trace is not 1");
      Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
      if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
    return QuantumState(std::move(space), std::move(rho));
  }

  bool is_pure() const { return pure_; }
  const CompositeSpace& space() const { return space_; }
  const Vector& vector() const {
    if (!pure_) throw std::logic_error("state is not pure");
    return psi_;
  }
  const Matrix& density_matrix() const {
    if (pure_) throw std::logic_error("state is pure; use to_density()");
    return rho_;
  }
  Matrix to_density() const { return pure_ ? Matrix(psi_ * psi_.adjoint()) : rho_; }

  /// tr(rho X) resp. <psi|X|psi>. O(d^2) in both forms.
  Complex expectation(const Matrix& op) const {
    if (op.rows() != space_.dim() || op.cols() != space_.dim())
      throw std::invalid_argument("operator dimension does not match state");
    if (pure_) return psi_.dot(op * psi_);
    return rho_.transpose().cwiseProduct(op).sum();
  }

  double norm_error() const {
    if (pure_) return std::abs(psi_.norm() - 1.0);
    return std::abs(rho_.trace().real() - 1.0) + std::abs(rho_.trace().imag());
  }

 private:
  QuantumState(CompositeSpace space, Vector psi)
      : space_(std::move(space)), pure_(true), psi_(std::move(psi)) {}
  QuantumState(CompositeSpace space, Matrix rho)
      : space_(std::move(space)), pure_(false), rho_(std::move(rho)) {}

  CompositeSpace space_;
  bool pure_;
  Vector psi_;
  Matrix rho_;
};

inline QuantumState basis_state(const CompositeSpace& space, std::span<const int> occ) {
  Vector v = Vector::Zero(space.dim());
  v(space.index_of(occ)) = 1.0;
  return QuantumState::pure(space, std::move(v));
}
inline QuantumState basis_state(const CompositeSpace& space, std::initializer_list<int> occ) {
  return basis_state(space, std::span<const int>(occ.begin(), occ.size()));
}

/// Normalized superposition of basis states.
inline QuantumState superpose(const CompositeSpace& space,
                              const std::vector<std::pair<Complex, std::vector<int>>>& terms) {
  Vector v = Vector::Zero(space.dim());
  for (const auto& [amp, occ] : terms) v(space.index_of(occ)) += amp;
  const double norm = v.norm();
  if (norm < 1e-14) throw std::invalid_argument("superposition has zero norm");
  v /= norm;
  return QuantumState::pure(space, std::move(v));
}

/// Two-mode squeezed vacuum, amplitudes proportional to tanh(r)^n on |nn>.
/// Requires the truncated tail mass tanh(r)^{2(cutoff+1)} < 1e-12.
inline QuantumState tmsv(const CompositeSpace& space, double r) {
  if (space.mode_count() != 2 || !space.all_kind(ModeKind::Boson))
    throw std::invalid_argument("tmsv needs two boson modes");
  if (r < 0.0) throw std::invalid_argument("tmsv needs r >= 0");
  const int nmax = std::min(space.mode(0).cutoff, space.mode(1).cutoff);
  const double t = std::tanh(r);
  if (std::pow(t, 2.0 * (nmax + 1)) >= 1e-12)
    throw std::invalid_argument("tmsv cutoff too small for this squeezing; increase the cutoff");
  Vector v = Vector::Zero(space.dim());
  double amp = 1.0;
  for (int n = 0; n <= nmax; ++n) {
    v(space.index_of({n, n})) = amp;
    amp *= t;
  }
  v /= v.norm();
  return QuantumState::pure(space, std::move(v));
}

/// cos(theta)|110> + e^{i phi} sin(theta)|001> in the level basis; the
/// designed violation target for the tripartite criteria. Works for any
/// 3-mode space with per-mode dimension >= 2.
inline QuantumState violating_family(const CompositeSpace& space, double theta, double phi) {
  if (space.mode_count() != 3) throw std::invalid_argument("violating family needs 3 modes");
  for (int i = 0; i < 3; ++i)
    if (space.mode(i).dim() < 2) throw std::invalid_argument("mode dimension < 2");
  const Complex a(std::cos(theta), 0.0);
  const Complex b = std::sin(theta) * Complex(std::cos(phi), std::sin(phi));
  Vector v = Vector::Zero(space.dim());
  v(space.index_of({1, 1, 0})) = a;
  v(space.index_of({0, 0, 1})) = b;
  const double norm = v.norm();
  if (norm < 1e-14) throw std::invalid_argument("violating family state has zero norm");
  v /= norm;
  return QuantumState::pure(space, std::move(v));
}

/// Haar-direction random pure state (normalized complex-Gaussian vector).
inline QuantumState random_pure(const CompositeSpace& space, RngStream& rng) {
  Vector v(space.dim());
  for (Index i = 0; i < space.dim(); ++i) v(i) = rng.normal_complex();
  v /= v.norm();
  return QuantumState::pure(space, std::move(v));
}

namespace detail {

// Ginibre density of the given edge and rank: G G^dag / tr(G G^dag).
inline Matrix ginibre_density(int dim, int rank, RngStream& rng) {
  Matrix g(dim, rank);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.normal_complex();
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace detail

/// Ginibre random density matrix of the given rank.
inline QuantumState random_density(const CompositeSpace& space, RngStream& rng, int rank) {
  if (rank < 1) throw std::invalid_argument("density rank must be >= 1");
  Matrix rho = detail::ginibre_density(static_cast<int>(space.dim()), rank, rng);
  return QuantumState::density(space, std::move(rho), /*validate=*/false);
}

/// Default per-mode support caps for separable sampling: two levels below
/// the cutoff for unbounded kinds (so degree-2 monomials in the criteria act
/// without truncation error), full support for spin modes.
inline std::vector<int> default_support_caps(const CompositeSpace& space) {
  std::vector<int> caps(static_cast<std::size_t>(space.mode_count()));
  for (int i = 0; i < space.mode_count(); ++i) {
    const auto& m = space.mode(i);
    caps[static_cast<std::size_t>(i)] =
        (m.kind == ModeKind::Spin) ? m.dim() - 1 : std::max(1, m.dim() - 3);
  }
  return caps;
}

/// Convex mixture of K product states: rho = sum_i p_i (x) _m rho_m^(i),
/// with flat-Dirichlet weights and local Ginibre densities supported on
/// levels 0..cap[m] of each mode. local_rank = 0 means full local rank.
inline QuantumState random_separable(const CompositeSpace& space, RngStream& rng, int components,
                                     std::span<const int> caps, int local_rank = 0) {
  if (components < 1) throw std::invalid_argument("separable sampler needs K >= 1");
  if (static_cast<int>(caps.size()) != space.mode_count())
    throw std::invalid_argument("cap list length does not match mode count");
  for (int m = 0; m < space.mode_count(); ++m) {
    const auto& mode = space.mode(m);
    const int cap = caps[static_cast<std::size_t>(m)];
    if (cap < 0 || cap > mode.dim() - 1)
      throw std::invalid_argument("support cap out of range for mode " + std::to_string(m));
    if (mode.kind != ModeKind::Spin && cap > mode.dim() - 2)
      throw std::invalid_argument(
          "support cap too large for unbounded mode (needs cap <= dim-2)");
  }

  std::vector<double> weights(static_cast<std::size_t>(components));
  double wsum = 0.0;
  for (auto& w : weights) {
    w = -std::log(1.0 - rng.uniform());  // standard exponential
    wsum += w;
  }

  Matrix rho = Matrix::Zero(space.dim(), space.dim());
  for (int kcomp = 0; kcomp < components; ++kcomp) {
    Matrix prod = Matrix::Identity(1, 1);
    for (int m = 0; m < space.mode_count(); ++m) {
      const int d = space.mode(m).dim();
      const int dloc = caps[static_cast<std::size_t>(m)] + 1;
      const int rank = (local_rank == 0) ? dloc : std::min(local_rank, dloc);
      Matrix local = Matrix::Zero(d, d);
      local.topLeftCorner(dloc, dloc) = detail::ginibre_density(dloc, rank, rng);
      prod = detail::kron(prod, local);
    }
    rho += (weights[static_cast<std::size_t>(kcomp)] / wsum) * prod;
  }
  rho /= rho.trace().real();  // guard rounding; already ~1
  return QuantumState::density(space, std::move(rho), /*validate=*/false);
}

inline QuantumState random_separable(const CompositeSpace& space, RngStream& rng, int components,
                                     int local_rank = 0) {
  const auto caps = default_support_caps(space);
  return random_separable(space, rng, components, caps, local_rank);
}

}  // namespace triwit
