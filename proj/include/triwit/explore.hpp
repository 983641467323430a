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
// Monte-Carlo separability audits, violation search over parameterized
// state families, and the large-j / large-k reduction study.

#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "triwit/criteria.hpp"
#include "triwit/nelder_mead.hpp"
#include "triwit/ops.hpp"
#include "triwit/states.hpp"

namespace triwit {

struct AuditReport {
  std::string criterion_id;
  long samples = 0;
  long violations = 0;  // margins below -tolerance
  double min_margin = 0.0;
  std::uint64_t seed = 0;
  double tolerance = kDetectionTolerance;
  double elapsed_seconds = 0.0;
  std::vector<double> margins;  // per sample, index order
};

/// Evaluate the criterion margin on n deterministic samples. Sample i is
/// drawn from RngStream(seed, i), so the report is reproducible and
/// independent of the thread count; per-index results are merged in order.
inline AuditReport mc_audit(const Criterion& criterion,
                            const std::function<QuantumState(RngStream&)>& sampler,
                            long n_samples, std::uint64_t seed, int threads = 1) {
  if (n_samples < 1) throw std::invalid_argument("audit needs at least one sample");
  if (threads < 1) threads = 1;
  const auto start = std::chrono::steady_clock::now();

  std::vector<double> margins(static_cast<std::size_t>(n_samples));
  auto worker = [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      RngStream rng(seed, static_cast<std::uint64_t>(i));
      const QuantumState state = sampler(rng);
      margins[static_cast<std::size_t>(i)] = criterion.evaluate(state).margin;
    }
  };

  if (threads == 1 || n_samples < 2 * threads) {
    worker(0, n_samples);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (n_samples + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const long begin = t * chunk;
      const long end = std::min(n_samples, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  AuditReport rep;
  rep.criterion_id = criterion.id();
  rep.samples = n_samples;
  rep.seed = seed;
  rep.tolerance = criterion.tolerance();
  rep.min_margin = margins.front();
  for (double m : margins) {
    rep.min_margin = std::min(rep.min_margin, m);
    if (m < -criterion.tolerance()) ++rep.violations;
  }
  rep.margins = std::move(margins);
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// A box-constrained map from a real parameter vector to a state.
struct StateFamily {
  std::vector<double> lower, upper;
  std::function<QuantumState(std::span<const double>)> make;
};

/// (theta, phi) |-> cos(theta)|110> + e^{i phi} sin(theta)|001>.
inline StateFamily violating_state_family(const CompositeSpace& space) {
  StateFamily fam;
  fam.lower = {0.0, 0.0};
  fam.upper = {M_PI / 2.0, 2.0 * M_PI};
  fam.make = [space](std::span<const double> p) {
    return violating_family(space, p[0], p[1]);
  };
  return fam;
}

struct OptimizeConfig {
  int restarts = 16;
  std::uint64_t seed = 0;
  NelderMeadOptions nm;
};

struct OptResult {
  std::vector<double> best_params;
  double best_margin = 0.0;
  int iterations = 0;
  int restarts_used = 0;
  bool converged = false;
};

/// Minimize the criterion margin over the family box with seeded
/// Nelder-Mead restarts. Parameters are clamped into the box before the
/// state is built, so best_params always lies inside it; the returned
/// best_margin is re-evaluated at best_params before reporting.
inline OptResult maximize_violation(const Criterion& criterion, const StateFamily& family,
                                    const OptimizeConfig& config = {}) {
  const std::size_t dim = family.lower.size();
  if (dim == 0 || family.upper.size() != dim)
    throw std::invalid_argument("family box is empty or inconsistent");

  auto clamp_point = [&](std::span<const double> p) {
    std::vector<double> q(dim);
    for (std::size_t d = 0; d < dim; ++d)
      q[d] = std::clamp(p[d], family.lower[d], family.upper[d]);
    return q;
  };
  auto objective = [&](std::span<const double> p) {
    return criterion.evaluate(family.make(clamp_point(p))).margin;
  };

  OptResult best;
  best.best_margin = std::numeric_limits<double>::infinity();
  for (int r = 0; r < config.restarts; ++r) {
    RngStream rng(config.seed, static_cast<std::uint64_t>(r));
    std::vector<std::vector<double>> simplex;
    std::vector<double> origin(dim);
    for (std::size_t d = 0; d < dim; ++d)
      origin[d] = family.lower[d] + rng.uniform() * (family.upper[d] - family.lower[d]);
    simplex.push_back(origin);
    for (std::size_t d = 0; d < dim; ++d) {
      auto v = origin;
      const double step = 0.1 * (family.upper[d] - family.lower[d]);
      v[d] += (v[d] + step <= family.upper[d]) ? step : -step;
      simplex.push_back(v);
    }
    const auto run = nelder_mead(objective, std::move(simplex), config.nm);
    if (run.best_value < best.best_margin) {
      best.best_margin = run.best_value;
      best.best_params = clamp_point(run.best_point);
      best.iterations = run.iterations;
      best.converged = run.converged;
    }
    best.restarts_used = r + 1;
  }
  // Recompute at the reported point; the two agree to 1e-12 by construction.
  best.best_margin = criterion.evaluate(family.make(best.best_params)).margin;
  return best;
}

struct LimitRow {
  int two_jk = 0;      // 2j or 2k
  double dev_ladder;   // scaled cross-ladder family vs bosonic L_x
  double dev_corr;     // scaled E (resp. F) vs N_a + N_b + 1
  double dev_z;        // scaled B_z (resp. D_z) vs H_z
};

/// Holstein-Primakoff reduction study: for each j (or k), compare the
/// 1/sqrt((2j)^3)-scaled cross-ladder operator against bosonic L_x and the
/// (2j)^-3-scaled diagonal E and B_z (F and D_z) against their bosonic
/// limits, on basis states with total occupation <= probe_budget. All
/// matrices are built on a small occupation window, which the probe columns
/// never leave, so the deviations carry no truncation error.
inline std::vector<LimitRow> hp_limit_study(ModeKind kind, std::span<const int> two_jk_values,
                                            int probe_budget = 2) {
  if (kind == ModeKind::Boson)
    throw std::invalid_argument("limit study applies to spin and su11 kinds");
  if (probe_budget < 1) throw std::invalid_argument("probe budget must be >= 1");
  const int w = probe_budget + 2;  // raising from a probe stays inside the window

  // Bosonic reference on the window.
  CompositeSpace bspace(std::vector<ModeSpec>(3, ModeSpec::boson(w - 1)));
  const Matrix lx_boson = boson_l_family(bspace, 2).x.mat;

  std::vector<LimitRow> rows;
  for (int two_jk : two_jk_values) {
    if (two_jk < 1) throw std::invalid_argument("j (k) values must be positive");
    if (kind == ModeKind::Spin && two_jk < probe_budget + 1)
      throw std::invalid_argument("j too small for the probe support");

    const Matrix low = detail::lowering_matrix(kind, two_jk, w);
    Matrix lowered[3], raised[3];
    for (int m = 0; m < 3; ++m) {
      lowered[m] = embed(low, m, bspace).mat;
      raised[m] = lowered[m].adjoint();
    }
    const double scale3 = std::pow(static_cast<double>(two_jk), 3);
    const Matrix cross =
        0.5 * (raised[0] * raised[1] * lowered[2] + lowered[0] * lowered[1] * raised[2]) /
        std::sqrt(scale3);

    LimitRow row{two_jk, 0.0, 0.0, 0.0};
    const double jk = 0.5 * two_jk;
    for (Index f = 0; f < bspace.dim(); ++f) {
      const auto occ = bspace.occupations_of(f);
      if (occ[0] + occ[1] + occ[2] > probe_budget) continue;
      row.dev_ladder =
          std::max(row.dev_ladder, (cross.col(f) - lx_boson.col(f)).cwiseAbs().maxCoeff());
      const double na = occ[0], nb = occ[1], nc = occ[2];
      double corr, zval;
      if (kind == ModeKind::Spin) {
        corr = 2.0 * (nc - jk) *
               (na * nb * (two_jk - na + 1) * (two_jk - nb + 1) -
                (na + 1) * (nb + 1) * (two_jk - na) * (two_jk - nb));
        zval = 0.5 * (na * nb * nc * (two_jk - na + 1) * (two_jk - nb + 1) * (two_jk - nc + 1) -
                      (na + 1) * (nb + 1) * (nc + 1) * (two_jk - na) * (two_jk - nb) *
                          (two_jk - nc));
      } else {
        corr = 2.0 * (nc + jk) *
               ((na + 1) * (nb + 1) * (two_jk + na) * (two_jk + nb) -
                na * nb * (two_jk + na - 1) * (two_jk + nb - 1));
        zval = 0.5 * (na * nb * nc * (two_jk + na - 1) * (two_jk + nb - 1) * (two_jk + nc - 1) -
                      (na + 1) * (nb + 1) * (nc + 1) * (two_jk + na) * (two_jk + nb) *
                          (two_jk + nc));
      }
      const double hz_boson = 0.5 * (na * nb * nc - (na + 1) * (nb + 1) * (nc + 1));
      row.dev_corr = std::max(row.dev_corr, std::abs(corr / scale3 - (na + nb + 1)));
      row.dev_z = std::max(row.dev_z, std::abs(zval / scale3 - hz_boson));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace triwit
