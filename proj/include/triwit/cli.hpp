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
// Job runners behind the command-line tool. Exit codes: 0 success, 2 input
// or schema error (thrown as std::invalid_argument / json exceptions and
// mapped by the caller), 3 invariant or audit failure. A criterion verdict
// is data, never an exit status.

#pragma once

#include <fstream>
#include <memory>
#include <ostream>
#include <string>

#include "triwit/dsl.hpp"
#include "triwit/explore.hpp"
#include "triwit/io.hpp"

namespace triwit::cli {

using nlohmann::json;

inline constexpr double kIdentityTolerance = 1e-10;

/// Build a criterion from a job: either a built-in criterion_id with its
/// parameters, or "pt_product"/"pt_sum"/"srir" with DSL operator strings
/// {"A","B","C"} and a 1-based "subset".
inline std::unique_ptr<Criterion> criterion_from_json(const CompositeSpace& space,
                                                      const json& job) {
  const std::string id = job.at("criterion").get<std::string>();
  std::unique_ptr<Criterion> crit;
  if (id == "boson3_product") {
    crit = std::make_unique<Boson3ProductCriterion>(space);
  } else if (id == "boson3_sum") {
    crit = std::make_unique<Boson3SumCriterion>(space, job.value("c", 1.0));
  } else if (id == "boson3_hur") {
    crit = std::make_unique<Boson3HurCriterion>(space);
  } else if (id == "su2_product") {
    crit = std::make_unique<Su2ProductCriterion>(space);
  } else if (id == "su11_product") {
    crit = std::make_unique<Su11ProductCriterion>(space);
  } else if (id == "duan") {
    crit = std::make_unique<DuanCriterion>(space, job.value("a", 1.0));
  } else if (id == "nmode_product") {
    crit = std::make_unique<NmodeProductCriterion>(space);
  } else if (id == "srir" || id == "pt_product" || id == "pt_sum") {
    if (!job.contains("operators"))
      throw std::invalid_argument("criterion \"" + id + "\" needs DSL \"operators\"");
    const json& ops = job["operators"];
    const Operator a = dsl::lower_text(ops.at("A").get<std::string>(), space);
    const Operator b = dsl::lower_text(ops.at("B").get<std::string>(), space);
    const Operator c = dsl::lower_text(ops.at("C").get<std::string>(), space);
    if (id == "srir") {
      crit = std::make_unique<SrirCriterion>(a, b, c);
    } else {
      std::vector<int> subset;
      for (int m : job.at("subset").get<std::vector<int>>()) {
        if (m < 1 || m > space.mode_count())
          throw std::invalid_argument("subset mode index out of range (1-based)");
        subset.push_back(m - 1);
      }
      const bool verify = job.value("verify_commutator", true);
      if (id == "pt_product")
        crit = std::make_unique<PtProductCriterion>(a, b, c, subset, verify);
      else
        crit = std::make_unique<PtSumCriterion>(a, b, c, job.value("c", 1.0), subset, verify);
    }
  } else {
    throw std::invalid_argument("unknown criterion \"" + id + "\"");
  }
  if (job.contains("tolerance")) crit->set_tolerance(job["tolerance"].get<double>());
  return crit;
}

/// Deterministic per-stream sampler from a job's "sampler" object. Returns
/// the sampler and whether it draws separable states (audited as such).
inline std::pair<std::function<QuantumState(RngStream&)>, bool> sampler_from_json(
    const CompositeSpace& space, const json& spec) {
  const std::string type = spec.at("type").get<std::string>();
  if (type == "random_separable") {
    std::vector<int> caps;
    if (spec.contains("cap")) {
      if (spec["cap"].is_array())
        caps = spec["cap"].get<std::vector<int>>();
      else
        caps.assign(static_cast<std::size_t>(space.mode_count()), spec["cap"].get<int>());
    } else {
      caps = default_support_caps(space);
    }
    const int k = spec.value("K", 8);
    const int rank = spec.value("rank", 0);
    return {[space, k, caps, rank](RngStream& rng) {
              return random_separable(space, rng, k, caps, rank);
            },
            true};
  }
  if (type == "random_pure") {
    return {[space](RngStream& rng) { return random_pure(space, rng); }, false};
  }
  if (type == "random_density") {
    const int rank = spec.value("rank", static_cast<int>(space.dim()));
    return {[space, rank](RngStream& rng) { return random_density(space, rng, rank); }, false};
  }
  throw std::invalid_argument("unknown sampler type \"" + type + "\"");
}

inline int run_check(const json& job, std::ostream& out) {
  const CompositeSpace space = io::space_from_json(job.at("space"));
  const QuantumState state = io::state_from_json(space, job.at("state"));
  const auto crit = criterion_from_json(space, job);
  out << io::report_to_json(crit->evaluate(state)).dump(2) << "\n";
  return 0;
}

inline int run_audit(const json& job, std::ostream& out, int threads = 1) {
  const CompositeSpace space = io::space_from_json(job.at("space"));
  const auto crit = criterion_from_json(space, job);
  const auto [sampler, separable] = sampler_from_json(space, job.at("sampler"));
  const long n = job.at("samples").get<long>();
  const auto seed = job.value("seed", std::uint64_t{0});
  const AuditReport rep = mc_audit(*crit, sampler, n, seed, threads);
  json j = io::audit_to_json(rep);
  j["separable_ensemble"] = separable;
  out << j.dump(2) << "\n";

  if (job.contains("margins_csv")) {
    std::ofstream csv(job["margins_csv"].get<std::string>());
    if (!csv) throw std::invalid_argument("cannot open margins CSV for writing");
    csv << "index,margin,detected\n";
    for (std::size_t i = 0; i < rep.margins.size(); ++i)
      csv << i << "," << io::format_double(rep.margins[i]) << ","
          << (rep.margins[i] < -rep.tolerance ? 1 : 0) << "\n";
  }
  // A separable ensemble producing violations is a soundness regression.
  return (separable && rep.violations > 0) ? 3 : 0;
}

namespace detail {

inline std::vector<double> grid_axis(const json& spec) {
  if (spec.is_number()) return {spec.get<double>()};
  if (spec.is_array()) return spec.get<std::vector<double>>();
  if (spec.is_object()) {
    if (spec.contains("value")) return {spec["value"].get<double>()};
    const double start = spec.at("start").get<double>();
    const double stop = spec.at("stop").get<double>();
    const int count = spec.at("count").get<int>();
    if (count < 0) throw std::invalid_argument("grid count must be >= 0");
    std::vector<double> axis;
    for (int i = 0; i < count; ++i)
      axis.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
    return axis;
  }
  throw std::invalid_argument("grid axis must be a number, array, or {start,stop,count}");
}

}  // namespace detail

/// Sweep the (theta, phi) family over a grid and emit one CSV row per point.
inline int run_scan(const json& job, std::ostream& out) {
  const CompositeSpace space = io::space_from_json(job.at("space"));
  const auto crit = criterion_from_json(space, job);
  const json& family = job.at("family");
  if (family.at("type").get<std::string>() != "violating_family")
    throw std::invalid_argument("scan supports the \"violating_family\" family");
  const json& grid = job.at("grid");
  const auto thetas = grid.contains("theta") ? detail::grid_axis(grid["theta"])
                                             : std::vector<double>{0.0};
  const auto phis =
      grid.contains("phi") ? detail::grid_axis(grid["phi"]) : std::vector<double>{0.0};

  out << "theta,phi,lhs,rhs,margin,detected\n";
  for (double theta : thetas) {
    for (double phi : phis) {
      const auto rep = crit->evaluate(violating_family(space, theta, phi));
      out << io::format_double(theta) << "," << io::format_double(phi) << ","
          << io::format_double(rep.lhs) << "," << io::format_double(rep.rhs) << ","
          << io::format_double(rep.margin) << ","
          << (rep.verdict == Verdict::Detected ? 1 : 0) << "\n";
    }
  }
  return 0;
}

inline int run_optimize(const json& job, std::ostream& out) {
  const CompositeSpace space = io::space_from_json(job.at("space"));
  const auto crit = criterion_from_json(space, job);
  const json& family = job.at("family");
  if (family.at("type").get<std::string>() != "violating_family")
    throw std::invalid_argument("optimize supports the \"violating_family\" family");
  OptimizeConfig config;
  config.restarts = job.value("restarts", 16);
  config.seed = job.value("seed", std::uint64_t{0});
  config.nm.max_iterations = job.value("max_iterations", 2000);
  config.nm.tolerance = job.value("nm_tolerance", 1e-8);
  const OptResult result = maximize_violation(*crit, violating_state_family(space), config);
  out << io::opt_result_to_json(result).dump(2) << "\n";
  return 0;
}

/// Identity suites per space kind; exits 3 if any deviation exceeds 1e-10.
inline int run_verify(const std::string& kind, const json& options, std::ostream& out) {
  json reports = json::array();
  bool pass = true;
  auto push = [&](const IdentityReport& rep) {
    reports.push_back(io::identity_report_to_json(rep, kIdentityTolerance));
    pass = pass && rep.all_within(kIdentityTolerance);
  };
  if (kind == "boson3") {
    push(verify_boson_identities(3, options.value("cutoff", 6), options.value("degree", 2)));
  } else if (kind == "boson_n") {
    for (int n : options.value("n_list", std::vector<int>{4, 5}))
      push(verify_boson_identities(n, options.value("cutoff", n == 4 ? 4 : 3),
                                   options.value("degree", 2)));
  } else if (kind == "su2") {
    for (int two_j : options.value("two_j_list", std::vector<int>{1, 2, 3, 4}))
      push(verify_su2_identities(two_j));
  } else if (kind == "su11") {
    for (int two_k : options.value("two_k_list", std::vector<int>{1, 2}))
      push(verify_su11_identities(two_k, options.value("cutoff", 8), options.value("degree", 2)));
  } else {
    throw std::invalid_argument("unknown verify kind \"" + kind +
                                "\" (expected boson3, boson_n, su2, or su11)");
  }
  out << json{{"schema", 1}, {"kind", kind}, {"reports", reports}, {"pass", pass}}.dump(2)
      << "\n";
  return pass ? 0 : 3;
}

/// Reduction study: one CSV row per j (or k), with deviation ratios between
/// consecutive rows where available.
inline int run_limit(const json& job, std::ostream& out) {
  const std::string kind_str = job.at("kind").get<std::string>();
  ModeKind kind;
  if (kind_str == "su2" || kind_str == "spin")
    kind = ModeKind::Spin;
  else if (kind_str == "su11")
    kind = ModeKind::SU11;
  else
    throw std::invalid_argument("limit kind must be su2 or su11");

  std::vector<int> two_jk;
  if (job.contains("two_jk_list")) {
    two_jk = job["two_jk_list"].get<std::vector<int>>();
  } else if (job.contains("j_list")) {
    for (double j : job["j_list"].get<std::vector<double>>()) {
      const double doubled = 2.0 * j;
      if (std::abs(doubled - std::llround(doubled)) > 1e-9)
        throw std::invalid_argument("j (k) values must be half-integers");
      two_jk.push_back(static_cast<int>(std::llround(doubled)));
    }
  } else {
    throw std::invalid_argument("limit job needs j_list or two_jk_list");
  }

  const auto rows = hp_limit_study(kind, two_jk, job.value("probe_budget", 2));
  out << "two_jk,jk,dev_ladder,dev_corr,dev_z,ratio_ladder,ratio_corr,ratio_z\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << r.two_jk << "," << io::format_double(0.5 * r.two_jk) << ","
        << io::format_double(r.dev_ladder) << "," << io::format_double(r.dev_corr) << ","
        << io::format_double(r.dev_z);
    if (i > 0) {
      const auto& p = rows[i - 1];
      out << "," << io::format_double(r.dev_ladder / p.dev_ladder) << ","
          << io::format_double(r.dev_corr / p.dev_corr) << ","
          << io::format_double(r.dev_z / p.dev_z);
    } else {
      out << ",,,";
    }
    out << "\n";
  }
  return 0;
}

}  // namespace triwit::cli
