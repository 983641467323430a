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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace triwit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = std::int64_t;

/// Kinds of single modes supported by the toolkit.
///
/// Boson: truncated Fock space |0..cutoff>, a|n> = sqrt(n)|n-1>.
/// Spin:  level basis |N> = |J_z + j>, N = 0..2j, so every ladder matrix is
///        real and levels start at zero like a Fock space.
/// SU11:  discrete-series levels |m>, m = 0..cutoff, with Bargmann index k;
///        K-|m> = sqrt(m(2k+m-1))|m-1>.
enum class ModeKind { Boson, Spin, SU11 };

inline const char* to_string(ModeKind k) {
  switch (k) {
    case ModeKind::Boson: return "boson";
    case ModeKind::Spin: return "spin";
    case ModeKind::SU11: return "su11";
  }
  return "?";
}

/// A single mode. Half-integers j and k are stored doubled (two_jk = 2j or
/// 2k) so mode equality and invariants stay exact.
struct ModeSpec {
  ModeKind kind = ModeKind::Boson;
  int two_jk = 0;  // 2j for spin, 2k for su11; unused for boson
  int cutoff = 0;  // max occupation (boson) or max level (su11); unused for spin

  static ModeSpec boson(int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("boson mode needs cutoff >= 1");
    return ModeSpec{ModeKind::Boson, 0, cutoff};
  }
  static ModeSpec spin(int two_j) {
    if (two_j < 1) throw std::invalid_argument("spin mode needs 2j >= 1");
    return ModeSpec{ModeKind::Spin, two_j, 0};
  }
  static ModeSpec su11(int two_k, int cutoff) {
    if (two_k < 1) throw std::invalid_argument("su11 mode needs 2k >= 1");
    if (cutoff < 1) throw std::invalid_argument("su11 mode needs cutoff >= 1");
    return ModeSpec{ModeKind::SU11, two_k, cutoff};
  }

  int dim() const {
    switch (kind) {
      case ModeKind::Boson: return cutoff + 1;
      case ModeKind::Spin: return two_jk + 1;
      case ModeKind::SU11: return cutoff + 1;
    }
    return 0;
  }

  bool operator==(const ModeSpec&) const = default;
};

/// An ordered tensor product of modes. Mode 0 is the most significant factor
/// of the flat basis index: flat = ((n0*d1 + n1)*d2 + n2)...
class CompositeSpace {
 public:
  explicit CompositeSpace(std::vector<ModeSpec> modes) : modes_(std::move(modes)) {
    if (modes_.empty()) throw std::invalid_argument("space needs at least one mode");
    dim_ = 1;
    for (const auto& m : modes_) {
      dim_ *= m.dim();
      if (dim_ > (Index{1} << 26))
        throw std::invalid_argument("composite dimension too large for dense matrices");
    }
  }

  const std::vector<ModeSpec>& modes() const { return modes_; }
  const ModeSpec& mode(int i) const { return modes_.at(static_cast<std::size_t>(i)); }
  int mode_count() const { return static_cast<int>(modes_.size()); }
  Index dim() const { return dim_; }

  /// Product of the dimensions of all modes after `i` (the stride of mode i
  /// in the flat index).
  Index stride(int i) const {
    Index s = 1;
    for (int m = i + 1; m < mode_count(); ++m) s *= modes_[static_cast<std::size_t>(m)].dim();
    return s;
  }

  Index index_of(std::span<const int> occ) const {
    if (static_cast<int>(occ.size()) != mode_count())
      throw std::invalid_argument("occupation list length does not match mode count");
    Index flat = 0;
    for (int i = 0; i < mode_count(); ++i) {
      const int d = modes_[static_cast<std::size_t>(i)].dim();
      if (occ[static_cast<std::size_t>(i)] < 0 || occ[static_cast<std::size_t>(i)] >= d)
        throw std::invalid_argument("occupation out of range for mode " + std::to_string(i));
      flat = flat * d + occ[static_cast<std::size_t>(i)];
    }
    return flat;
  }
  Index index_of(std::initializer_list<int> occ) const {
    return index_of(std::span<const int>(occ.begin(), occ.size()));
  }

  std::vector<int> occupations_of(Index flat) const {
    if (flat < 0 || flat >= dim_) throw std::invalid_argument("flat index out of range");
    std::vector<int> occ(static_cast<std::size_t>(mode_count()));
    for (int i = mode_count() - 1; i >= 0; --i) {
      const int d = modes_[static_cast<std::size_t>(i)].dim();
      occ[static_cast<std::size_t>(i)] = static_cast<int>(flat % d);
      flat /= d;
    }
    return occ;
  }

  bool all_kind(ModeKind k) const {
    for (const auto& m : modes_)
      if (m.kind != k) return false;
    return true;
  }

  bool operator==(const CompositeSpace& other) const { return modes_ == other.modes_; }

 private:
  std::vector<ModeSpec> modes_;
  Index dim_ = 0;
};

/// A dense operator bound to the space it acts on.
struct Operator {
  CompositeSpace space;
  Matrix mat;
};

inline void require_same_space(const Operator& a, const Operator& b) {
  if (!(a.space == b.space)) throw std::invalid_argument("operators live on different spaces");
}

inline Operator operator+(const Operator& a, const Operator& b) {
  require_same_space(a, b);
  return {a.space, a.mat + b.mat};
}
inline Operator operator-(const Operator& a, const Operator& b) {
  require_same_space(a, b);
  return {a.space, a.mat - b.mat};
}
inline Operator operator*(const Operator& a, const Operator& b) {
  require_same_space(a, b);
  return {a.space, a.mat * b.mat};
}
inline Operator operator*(Complex s, const Operator& a) { return {a.space, s * a.mat}; }
inline Operator operator*(double s, const Operator& a) { return {a.space, s * a.mat}; }

inline Operator adjoint(const Operator& a) { return {a.space, a.mat.adjoint()}; }

inline double hermiticity_error(const Matrix& m) {
  return (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
}

inline Operator identity_op(const CompositeSpace& space) {
  return {space, Matrix::Identity(space.dim(), space.dim())};
}

/// Projector onto basis states at least `degree[i]` levels below the top of
/// mode i. Operator identities whose raising degree per mode is bounded by
/// `degree` hold exactly on the projected subspace despite truncation.
inline Operator safe_projector(const CompositeSpace& space, std::span<const int> degree) {
  if (static_cast<int>(degree.size()) != space.mode_count())
    throw std::invalid_argument("degree list length does not match mode count");
  for (int i = 0; i < space.mode_count(); ++i) {
    if (degree[static_cast<std::size_t>(i)] < 0 ||
        degree[static_cast<std::size_t>(i)] >= space.mode(i).dim())
      throw std::invalid_argument("projector degree out of range for mode " + std::to_string(i));
  }
  Matrix p = Matrix::Zero(space.dim(), space.dim());
  for (Index f = 0; f < space.dim(); ++f) {
    const auto occ = space.occupations_of(f);
    bool keep = true;
    for (int i = 0; i < space.mode_count(); ++i) {
      if (occ[static_cast<std::size_t>(i)] >
          space.mode(i).dim() - 1 - degree[static_cast<std::size_t>(i)]) {
        keep = false;
        break;
      }
    }
    if (keep) p(f, f) = 1.0;
  }
  return {space, p};
}

inline Operator safe_projector(const CompositeSpace& space, int uniform_degree) {
  std::vector<int> deg(static_cast<std::size_t>(space.mode_count()), uniform_degree);
  return safe_projector(space, deg);
}

/// Uniform projector degree that guards identities of the given raising
/// degree: `degree` per unbounded mode, 0 for spin modes (finite, exact).
inline std::vector<int> guard_degrees(const CompositeSpace& space, int degree) {
  std::vector<int> deg(static_cast<std::size_t>(space.mode_count()), 0);
  for (int i = 0; i < space.mode_count(); ++i)
    if (space.mode(i).kind != ModeKind::Spin) deg[static_cast<std::size_t>(i)] = degree;
  return deg;
}

}  // namespace triwit
