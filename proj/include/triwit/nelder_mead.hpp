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

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace triwit {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double tolerance = 1e-8;  // converged when the value spread falls below this
  int max_iterations = 2000;
};

struct NelderMeadResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Downhill simplex minimization. The objective may contain sqrt/abs kinks,
/// which is why the criteria searches are derivative-free.
inline NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)>& f,
    std::vector<std::vector<double>> simplex, const NelderMeadOptions& opt = {}) {
  if (simplex.size() < 2) throw std::invalid_argument("simplex needs at least 2 vertices");
  const std::size_t n = simplex.front().size();
  if (simplex.size() != n + 1) throw std::invalid_argument("simplex must have dim+1 vertices");

  std::vector<double> values(simplex.size());
  for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = f(simplex[i]);

  auto order = [&]() {
    std::vector<std::size_t> idx(simplex.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<std::vector<double>> s2(simplex.size());
    std::vector<double> v2(simplex.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      s2[i] = simplex[idx[i]];
      v2[i] = values[idx[i]];
    }
    simplex.swap(s2);
    values.swap(v2);
  };

  NelderMeadResult result;
  int iter = 0;
  for (; iter < opt.max_iterations; ++iter) {
    order();
    if (values.back() - values.front() <= opt.tolerance) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v + 1 < simplex.size(); ++v)
      for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[v][d];
    for (auto& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](const std::vector<double>& from, double coeff) {
      std::vector<double> p(n);
      for (std::size_t d = 0; d < n; ++d) p[d] = centroid[d] + coeff * (centroid[d] - from[d]);
      return p;
    };

    const auto reflected = blend(simplex.back(), opt.reflection);
    const double fr = f(reflected);
    if (fr < values.front()) {
      const auto expanded = blend(simplex.back(), opt.reflection * opt.expansion);
      const double fe = f(expanded);
      if (fe < fr) {
        simplex.back() = expanded;
        values.back() = fe;
      } else {
        simplex.back() = reflected;
        values.back() = fr;
      }
    } else if (fr < values[values.size() - 2]) {
      simplex.back() = reflected;
      values.back() = fr;
    } else {
      const bool outside = fr < values.back();
      std::vector<double> contracted(n);
      if (outside) {
        for (std::size_t d = 0; d < n; ++d)
          contracted[d] = centroid[d] + opt.contraction * (reflected[d] - centroid[d]);
      } else {
        for (std::size_t d = 0; d < n; ++d)
          contracted[d] = centroid[d] + opt.contraction * (simplex.back()[d] - centroid[d]);
      }
      const double fc = f(contracted);
      if (fc < (outside ? fr : values.back())) {
        simplex.back() = contracted;
        values.back() = fc;
      } else {
        for (std::size_t v = 1; v < simplex.size(); ++v) {
          for (std::size_t d = 0; d < n; ++d)
            simplex[v][d] = simplex[0][d] + opt.shrink * (simplex[v][d] - simplex[0][d]);
          values[v] = f(simplex[v]);
        }
      }
    }
  }
  order();
  result.best_point = simplex.front();
  result.best_value = values.front();
  result.iterations = iter;
  return result;
}

}  // namespace triwit
