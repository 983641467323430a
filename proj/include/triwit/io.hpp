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
// JSON (de)serialization of spaces, state specifications, reports, and the
// debug matrix export, plus round-trip-safe CSV float formatting.

#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "triwit/criteria.hpp"
#include "triwit/explore.hpp"
#include "triwit/ptrans.hpp"
#include "triwit/space.hpp"
#include "triwit/states.hpp"

namespace triwit::io {

using nlohmann::json;

/// 17 significant digits: enough to round-trip any double through text.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline json space_to_json(const CompositeSpace& space) {
  json modes = json::array();
  for (const auto& m : space.modes()) {
    json jm;
    jm["kind"] = to_string(m.kind);
    switch (m.kind) {
      case ModeKind::Boson:
        jm["cutoff"] = m.cutoff;
        break;
      case ModeKind::Spin:
        jm["two_j"] = m.two_jk;
        break;
      case ModeKind::SU11:
        jm["two_k"] = m.two_jk;
        jm["cutoff"] = m.cutoff;
        break;
    }
    modes.push_back(jm);
  }
  return json{{"modes", modes}};
}

inline CompositeSpace space_from_json(const json& j) {
  if (!j.contains("modes") || !j["modes"].is_array() || j["modes"].empty())
    throw std::invalid_argument("space spec needs a nonempty \"modes\" array");
  std::vector<ModeSpec> modes;
  for (const auto& jm : j["modes"]) {
    const std::string kind = jm.at("kind").get<std::string>();
    if (kind == "boson") {
      modes.push_back(ModeSpec::boson(jm.at("cutoff").get<int>()));
    } else if (kind == "spin") {
      modes.push_back(ModeSpec::spin(jm.at("two_j").get<int>()));
    } else if (kind == "su11") {
      modes.push_back(ModeSpec::su11(jm.at("two_k").get<int>(), jm.at("cutoff").get<int>()));
    } else {
      throw std::invalid_argument("unknown mode kind \"" + kind + "\"");
    }
  }
  return CompositeSpace(std::move(modes));
}

/// State specifications:
///   {"type":"basis","occ":[0,0,0]}
///   {"type":"superposition","terms":[{"amp":[re,im],"occ":[1,1,0]},...]}
///   {"type":"tmsv","r":0.5}
///   {"type":"violating_family","theta":0.7854,"phi":0}
///   {"type":"random_pure","seed":1,"stream":0}
///   {"type":"random_density","seed":1,"rank":4,"stream":0}
///   {"type":"random_separable","seed":1,"K":8,"cap":2,"rank":0,"stream":0}
/// cap may be a single level or a per-mode array; omitted means the default
/// safe support (two levels below the cutoff for unbounded modes).
inline QuantumState state_from_json(const CompositeSpace& space, const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "basis") {
    const auto occ = j.at("occ").get<std::vector<int>>();
    return basis_state(space, occ);
  }
  if (type == "superposition") {
    std::vector<std::pair<Complex, std::vector<int>>> terms;
    for (const auto& t : j.at("terms")) {
      const auto amp = t.at("amp").get<std::vector<double>>();
      if (amp.size() != 2)
        throw std::invalid_argument("superposition amplitude must be [re, im]");
      terms.emplace_back(Complex(amp[0], amp[1]), t.at("occ").get<std::vector<int>>());
    }
    return superpose(space, terms);
  }
  if (type == "tmsv") return tmsv(space, j.at("r").get<double>());
  if (type == "violating_family")
    return violating_family(space, j.at("theta").get<double>(),
                            j.value("phi", 0.0));
  const auto seed = j.value("seed", std::uint64_t{0});
  const auto stream = j.value("stream", std::uint64_t{0});
  RngStream rng(seed, stream);
  if (type == "random_pure") return random_pure(space, rng);
  if (type == "random_density")
    return random_density(space, rng, j.value("rank", static_cast<int>(space.dim())));
  if (type == "random_separable") {
    std::vector<int> caps;
    if (j.contains("cap")) {
      if (j["cap"].is_array())
        caps = j["cap"].get<std::vector<int>>();
      else
        caps.assign(static_cast<std::size_t>(space.mode_count()), j["cap"].get<int>());
    } else {
      caps = default_support_caps(space);
    }
    return random_separable(space, rng, j.value("K", 8), caps, j.value("rank", 0));
  }
  throw std::invalid_argument("unknown state type \"" + type + "\"");
}

inline json report_to_json(const CriterionReport& r) {
  json moments = json::object();
  for (const auto& [name, value] : r.moments) moments[name] = value;
  return json{{"schema", 1},
              {"criterion_id", r.criterion_id},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"margin", r.margin},
              {"tolerance", r.tolerance},
              {"verdict", to_string(r.verdict)},
              {"moments", moments},
              {"variance_clamped", r.variance_clamped}};
}

inline json audit_to_json(const AuditReport& r) {
  return json{{"schema", 1},
              {"criterion_id", r.criterion_id},
              {"samples", r.samples},
              {"violations", r.violations},
              {"min_margin", r.min_margin},
              {"seed", r.seed},
              {"tolerance", r.tolerance},
              {"elapsed_seconds", r.elapsed_seconds}};
}

inline json identity_report_to_json(const IdentityReport& r, double tol) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"deviation", c.deviation}});
  return json{{"schema", 1},
              {"kind", r.kind},
              {"checks", checks},
              {"max_deviation", r.max_deviation()},
              {"tolerance", tol},
              {"pass", r.all_within(tol)}};
}

inline json opt_result_to_json(const OptResult& r) {
  return json{{"schema", 1},
              {"best_params", r.best_params},
              {"best_margin", r.best_margin},
              {"iterations", r.iterations},
              {"restarts_used", r.restarts_used},
              {"converged", r.converged}};
}

/// Debug export: matrix as row-major arrays of [re, im] pairs.
inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

}  // namespace triwit::io
