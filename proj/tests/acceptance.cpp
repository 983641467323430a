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
// Acceptance suite: every release gate in one binary, one pass/fail line
// per criterion. Expected values are frozen from hand derivations and from
// the independent oracles implemented below (state-vector ladder
// application, analytic EPR variances); they are never read back from the
// library under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include "triwit/cli.hpp"
#include "triwit/triwit.hpp"

using namespace triwit;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %2d. %s  (%s)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CompositeSpace boson_space(int n, int cutoff) {
  return CompositeSpace(std::vector<ModeSpec>(static_cast<std::size_t>(n),
                                              ModeSpec::boson(cutoff)));
}
CompositeSpace spin_space(int two_j) {
  return CompositeSpace(std::vector<ModeSpec>(3, ModeSpec::spin(two_j)));
}
CompositeSpace su11_space(int two_k, int cutoff) {
  return CompositeSpace(std::vector<ModeSpec>(3, ModeSpec::su11(two_k, cutoff)));
}

QuantumState pair_state(const CompositeSpace& space) {
  return superpose(space, {{1.0, {1, 1, 0}}, {1.0, {0, 0, 1}}});
}

void parallel_for(long n, const std::function<void(long)>& body) {
  const int threads =
      std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  if (threads == 1) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  const long chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const long begin = t * chunk, end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end]() {
      for (long i = begin; i < end; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Independent oracle: moments computed by applying ladder operators to the
// coefficient vector directly, never through the library's matrices.
namespace oracle {

Vector apply_ladder(const CompositeSpace& space, const Vector& v, int mode, int dir) {
  Vector out = Vector::Zero(space.dim());
  for (Index f = 0; f < space.dim(); ++f) {
    if (v(f) == Complex(0.0, 0.0)) continue;
    auto occ = space.occupations_of(f);
    const int level = occ[static_cast<std::size_t>(mode)];
    if (dir < 0) {
      if (level == 0) continue;
      occ[static_cast<std::size_t>(mode)] = level - 1;
      out(space.index_of(occ)) += v(f) * std::sqrt(static_cast<double>(level));
    } else {
      if (level == space.mode(mode).dim() - 1) continue;
      occ[static_cast<std::size_t>(mode)] = level + 1;
      out(space.index_of(occ)) += v(f) * std::sqrt(level + 1.0);
    }
  }
  return out;
}

// L_x psi and L_y psi for the tripartite cross-ladder (target = mode 3).
std::pair<Vector, Vector> apply_lxy(const CompositeSpace& space, const Vector& psi) {
  Vector up = apply_ladder(space, psi, 2, -1);
  up = apply_ladder(space, up, 1, +1);
  up = apply_ladder(space, up, 0, +1);
  Vector down = apply_ladder(space, psi, 2, +1);
  down = apply_ladder(space, down, 1, -1);
  down = apply_ladder(space, down, 0, -1);
  return {0.5 * (up + down), Complex(0.0, -0.5) * (up - down)};
}

double diag_mean(const CompositeSpace& space, const Vector& psi,
                 const std::function<double(const std::vector<int>&)>& f) {
  double sum = 0.0;
  for (Index i = 0; i < space.dim(); ++i)
    sum += std::norm(psi(i)) * f(space.occupations_of(i));
  return sum;
}

struct Boson3Margins {
  double product, hur, sum_c1;
};

Boson3Margins boson3_margins(const CompositeSpace& space, const Vector& psi) {
  const auto [lx_psi, ly_psi] = apply_lxy(space, psi);
  const double mean_lx = psi.dot(lx_psi).real();
  const double mean_ly = psi.dot(ly_psi).real();
  const double var_lx = lx_psi.squaredNorm() - mean_lx * mean_lx;
  const double var_ly = ly_psi.squaredNorm() - mean_ly * mean_ly;
  const double cov = lx_psi.dot(ly_psi).real() - mean_lx * mean_ly;
  const double nab1 =
      diag_mean(space, psi, [](const std::vector<int>& o) { return o[0] + o[1] + 1.0; });
  const double mplus = diag_mean(space, psi, [](const std::vector<int>& o) {
    return static_cast<double>(o[0]) * o[1] + static_cast<double>(o[1]) * o[2] +
           static_cast<double>(o[0]) * o[2];
  });
  const double nplus = diag_mean(space, psi, [](const std::vector<int>& o) {
    return static_cast<double>(o[0] + o[1] + o[2]);
  });
  const double nc = diag_mean(space, psi, [](const std::vector<int>& o) {
    return static_cast<double>(o[2]);
  });
  const double q = mplus + nplus + 1.0;
  Boson3Margins m{};
  m.product = (var_lx + 0.25 * nab1) * (var_ly + 0.25 * nab1) -
              (q * q / 16.0 + cov * cov);
  m.hur = var_lx + var_ly - 0.5 * (mplus + nc);
  m.sum_c1 = var_lx + var_ly + 0.5 * nab1 - std::sqrt(q * q / 4.0 + 4.0 * cov * cov);
  return m;
}

}  // namespace oracle

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto space = boson_space(3, 4);
  const auto psi = pair_state(space);

  const double product = boson_tripartite_product(psi).margin;
  const double hur = boson_tripartite_hur(psi).margin;
  const double sum1 = boson_tripartite_sum(psi, 1.0).margin;
  const auto ref = oracle::boson3_margins(space, psi.vector());

  const bool pass = std::abs(product - (-0.1875)) < 1e-12 &&
                    std::abs(hur - (-0.25)) < 1e-12 && std::abs(sum1 - (-0.25)) < 1e-12 &&
                    std::abs(ref.product - product) < 1e-12 &&
                    std::abs(ref.hur - hur) < 1e-12 && std::abs(ref.sum_c1 - sum1) < 1e-12 &&
                    seconds_since(t0) < 1.0;
  report(1, "bosonic violation margins -3/16, -1/4, -1/4 (oracle-checked)", pass,
         "product " + fmt(product) + ", hur " + fmt(hur) + ", sum " + fmt(sum1) + ", " +
             fmt(seconds_since(t0)) + " s");
}

void criterion_2() {
  const auto space = boson_space(3, 4);
  const auto rep = boson_tripartite_product(basis_state(space, {0, 0, 0}));
  CompositeSpace two({ModeSpec::boson(8), ModeSpec::boson(8)});
  const auto duan = duan_criterion(basis_state(two, {0, 0}), 1.0);
  const bool pass = std::abs(rep.margin) < 1e-12 && std::abs(rep.lhs - 1.0 / 16.0) < 1e-12 &&
                    std::abs(rep.rhs - 1.0 / 16.0) < 1e-12 && std::abs(duan.margin) < 1e-12;
  report(2, "vacuum saturation (tripartite product and two-mode EPR sum)", pass,
         "margins " + fmt(rep.margin) + " and " + fmt(duan.margin));
}

void criterion_3() {
  const auto space = boson_space(3, 4);
  const auto ghz = superpose(space, {{1.0, {0, 0, 0}}, {1.0, {1, 1, 1}}});
  const auto rep = boson_tripartite_product(ghz);
  const bool pass = std::abs(rep.margin - 9.0 / 16.0) < 1e-12 &&
                    rep.verdict == Verdict::NotDetected;
  report(3, "GHZ-type state is entangled yet undetected: margin +9/16", pass,
         "margin " + fmt(rep.margin));
}

void criterion_4() {
  const double m1 = su2_criterion(pair_state(spin_space(2))).margin;
  const double m12 = su2_criterion(pair_state(spin_space(1))).margin;
  const bool pass = std::abs(m1 - (-4.0)) < 1e-9 && std::abs(m12) < 1e-9;
  report(4, "su(2) margins: -4 at j=1, saturation at j=1/2", pass,
         "j=1: " + fmt(m1) + ", j=1/2: " + fmt(m12));
}

void criterion_5() {
  const auto rep = su11_criterion(pair_state(su11_space(1, 4)));
  const bool pass = std::abs(rep.margin - (-0.625)) < 1e-9 &&
                    std::abs(rep.moments.at("mean_f") - 9.0) < 1e-9 &&
                    std::abs(rep.moments.at("mean_dz") - (-5.0)) < 1e-9;
  report(5, "su(1,1) margin -0.625 at k=1/2 with <F>=9, <Dz>=-5", pass,
         "margin " + fmt(rep.margin));
}

void criterion_6() {
  const auto space4 = boson_space(4, 3);
  const auto psi4 = superpose(space4, {{1.0, {1, 1, 1, 0}}, {1.0, {0, 0, 0, 1}}});
  const double m4 = npartite_criterion(psi4).margin;

  const auto space3 = boson_space(3, 3);
  const NmodeProductCriterion nmode(space3);
  const Boson3ProductCriterion tri(space3);
  double max_diff = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    RngStream rng(60, s);
    const auto state = random_pure(space3, rng);
    max_diff = std::max(max_diff,
                        std::abs(nmode.evaluate(state).margin - tri.evaluate(state).margin));
  }
  const bool pass = std::abs(m4 - (-5.0 / 16.0)) < 1e-10 && max_diff < 1e-12;
  report(6, "n=4 margin -5/16; n=3 path equals the tripartite criterion", pass,
         "margin " + fmt(m4) + ", path diff " + fmt(max_diff));
}

void criterion_7() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::function<IdentityReport()>> suites = {
      [] { return verify_boson_identities(3, 6, 2); },
      [] { return verify_boson_identities(4, 4, 2); },
      [] { return verify_su2_identities(1); },
      [] { return verify_su2_identities(2); },
      [] { return verify_su2_identities(3); },
      [] { return verify_su2_identities(4); },
      [] { return verify_su11_identities(1, 8, 2); },
  };
  std::vector<IdentityReport> reports(suites.size());
  parallel_for(static_cast<long>(suites.size()),
               [&](long i) { reports[static_cast<std::size_t>(i)] = suites[i](); });

  double max_pt = 0.0, max_comm = 0.0;
  for (const auto& rep : reports) {
    for (const auto& check : rep.checks) {
      if (check.name.rfind("comm_", 0) == 0)
        max_comm = std::max(max_comm, check.deviation);
      else
        max_pt = std::max(max_pt, check.deviation);
    }
  }
  const double elapsed = seconds_since(t0);
  const bool pass = max_pt <= 1e-12 && max_comm <= 1e-10 && elapsed < 30.0;
  report(7, "identity suites: PT <= 1e-12, commutators <= 1e-10, < 30 s", pass,
         "pt " + fmt(max_pt) + ", comm " + fmt(max_comm) + ", " + fmt(elapsed) + " s");
}

void criterion_8() {
  CompositeSpace space({ModeSpec::boson(30), ModeSpec::boson(30)});
  const auto rep = duan_criterion(tmsv(space, 0.5), -1.0);
  const double analytic = 2.0 * std::exp(-1.0);  // two EPR variances of e^{-2r}
  const bool pass = std::abs(rep.lhs - analytic) < 1e-4 &&
                    std::abs(rep.margin - (analytic - 2.0)) < 1e-4;
  report(8, "squeezed vacuum r=0.5: Var(u)+Var(v) = 2/e, margin ~ -1.2642", pass,
         "lhs " + fmt(rep.lhs) + ", margin " + fmt(rep.margin));
}

void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;

  {  // 10^4 tripartite boson states, five criteria on shared samples
    const auto space = boson_space(3, 4);
    const std::vector<int> caps{2, 2, 2};
    std::vector<std::unique_ptr<Criterion>> crits;
    crits.push_back(std::make_unique<Boson3ProductCriterion>(space));
    crits.push_back(std::make_unique<Boson3SumCriterion>(space, 0.5));
    crits.push_back(std::make_unique<Boson3SumCriterion>(space, 1.0));
    crits.push_back(std::make_unique<Boson3SumCriterion>(space, 2.0));
    crits.push_back(std::make_unique<Boson3HurCriterion>(space));
    const long n = 10000;
    std::vector<double> min_margin(crits.size(), 0.0);
    std::mutex merge;
    parallel_for(n, [&](long i) {
      RngStream rng(20260809, static_cast<std::uint64_t>(i));
      const auto state = random_separable(space, rng, 8, caps);
      std::vector<double> local(crits.size());
      for (std::size_t c = 0; c < crits.size(); ++c)
        local[c] = crits[c]->evaluate(state).margin;
      std::lock_guard<std::mutex> lock(merge);
      for (std::size_t c = 0; c < crits.size(); ++c)
        min_margin[c] = std::min(min_margin[c], local[c]);
    });
    double worst = 0.0;
    for (double m : min_margin) worst = std::min(worst, m);
    pass = pass && worst >= -1e-9;
    detail += "boson min " + fmt(worst);
  }
  {  // 10^3 su2 and su11 states
    const auto sspace = spin_space(2);
    const Su2ProductCriterion scrit(sspace);
    const auto s_rep = mc_audit(
        scrit, [&](RngStream& rng) { return random_separable(sspace, rng, 8); }, 1000,
        31337, 4);
    const auto kspace = su11_space(1, 6);
    const Su11ProductCriterion kcrit(kspace);
    const std::vector<int> kcaps{2, 2, 2};
    const auto k_rep = mc_audit(
        kcrit, [&](RngStream& rng) { return random_separable(kspace, rng, 8, kcaps); },
        1000, 27182, 4);
    pass = pass && s_rep.violations == 0 && k_rep.violations == 0 &&
           s_rep.min_margin >= -1e-9 && k_rep.min_margin >= -1e-9;
    detail += ", su2 min " + fmt(s_rep.min_margin) + ", su11 min " + fmt(k_rep.min_margin);
  }
  const double elapsed = seconds_since(t0);
  pass = pass && elapsed < 300.0;
  report(9, "separability soundness: no false positives across 12k samples", pass,
         detail + ", " + fmt(elapsed) + " s");
}

void criterion_10() {
  bool pass = true;
  double worst_scaled = 0.0;
  auto run_family = [&](const Operator& x, const Operator& y, const CompositeSpace& space) {
    const auto c = Complex(0, -1) * commutator(x, y);
    const SrirCriterion crit(x, y, c);
    for (std::uint64_t s = 0; s < 1000; ++s) {
      RngStream rng(777, s);
      const auto state =
          (s % 2 == 0) ? random_pure(space, rng) : random_density(space, rng, 8);
      const auto rep = crit.evaluate(state);
      const double scaled = rep.margin / std::max(1.0, rep.lhs);
      worst_scaled = std::min(worst_scaled, scaled);
      pass = pass && scaled >= -1e-10;
    }
  };
  {
    const auto space = boson_space(3, 3);
    const auto fam = boson_l_family(space, 2);
    run_family(fam.x, fam.y, space);
  }
  {
    const auto space = spin_space(2);
    const auto fam = su2_families(space);
    run_family(fam.a.x, fam.a.y, space);
  }
  {
    const auto space = su11_space(1, 6);
    const auto fam = su11_families(space);
    run_family(fam.c.x, fam.c.y, space);
  }
  report(10, "indeterminacy bound holds for every state, all three families", pass,
         "worst scaled margin " + fmt(worst_scaled));
}

void criterion_11() {
  const auto space = boson_space(3, 3);
  const Boson3HurCriterion crit(space);
  bool pass = true;
  double worst_gap = 0.0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    RngStream rng(888, s);
    const auto state =
        (s % 2 == 0) ? random_pure(space, rng) : random_density(space, rng, 6);
    const auto rep = crit.evaluate(state);
    const double gap = rep.moments.at("rhs_c1") - rep.moments.at("rhs_c2");
    worst_gap = std::min(worst_gap, gap);
    pass = pass && gap >= -1e-12;
  }
  report(11, "the c=1 sum bound dominates the Heisenberg-only bound", pass,
         "worst gap " + fmt(worst_gap));
}

void criterion_12() {
  bool pass = true;
  std::string detail;
  const std::vector<int> two_jk = {8, 16, 32, 64};  // j, k = 4, 8, 16, 32
  for (ModeKind kind : {ModeKind::Spin, ModeKind::SU11}) {
    const auto rows = hp_limit_study(kind, two_jk, 2);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      for (double ratio : {rows[i].dev_ladder / rows[i - 1].dev_ladder,
                           rows[i].dev_corr / rows[i - 1].dev_corr,
                           rows[i].dev_z / rows[i - 1].dev_z}) {
        pass = pass && ratio >= 0.4 && ratio <= 0.6;
      }
    }
    detail += (kind == ModeKind::Spin ? std::string("spin ok") : std::string(", su11 ok"));
  }
  report(12, "reduction study: deviation ratios within [0.4, 0.6] for j,k = 4..32", pass,
         detail);
}

void criterion_13() {
  const auto space = boson_space(3, 3);
  const Boson3ProductCriterion crit(space);
  OptimizeConfig config;
  config.restarts = 16;
  config.seed = 4;
  const auto res = maximize_violation(crit, violating_state_family(space), config);
  const bool pass = res.best_margin <= -0.187 && res.restarts_used <= 16;
  report(13, "optimizer reaches margin <= -0.187 within 16 restarts", pass,
         "best " + fmt(res.best_margin) + " after " + std::to_string(res.restarts_used) +
             " restarts");
}

void criterion_14() {
  std::ifstream in(TRIWIT_SOURCE_DIR "/data/paper_ops.txt");
  bool pass = static_cast<bool>(in);
  int entries = 0;
  double max_diff = 0.0;
  std::string line;
  while (pass && std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag, name, eq, text;
    ss >> tag >> name >> eq;
    std::getline(ss, text);
    CompositeSpace space =
        tag == "boson3"  ? boson_space(3, 4)
        : tag == "su2j1" ? spin_space(2)
                         : su11_space(1, 5);
    const auto expr = dsl::parse(text);
    pass = pass && dsl::structurally_equal(*expr, *dsl::parse(dsl::print(expr)));
    const Matrix lowered = dsl::lower(expr, space).mat;
    Matrix expected;
    if (tag == "boson3") {
      const auto fam = name[0] == 'L'
                           ? boson_l_family(space, 2)
                           : boson_h_family(space);
      expected = name.ends_with("_x") ? fam.x.mat
                 : name.ends_with("_y") ? fam.y.mat
                                        : fam.z.mat;
    } else if (tag == "su2j1") {
      const auto fam = su2_families(space);
      const auto& triple = name[0] == 'A' ? fam.a : fam.b;
      expected = name.ends_with("_x") ? triple.x.mat
                 : name.ends_with("_y") ? triple.y.mat
                                        : triple.z.mat;
    } else {
      const auto fam = su11_families(space);
      const auto& triple = name[0] == 'C' ? fam.c : fam.d;
      expected = name.ends_with("_x") ? triple.x.mat
                 : name.ends_with("_y") ? triple.y.mat
                                        : triple.z.mat;
    }
    const double diff = (lowered - expected).cwiseAbs().maxCoeff();
    max_diff = std::max(max_diff, diff);
    pass = pass && diff == 0.0;
    ++entries;
  }
  pass = pass && entries == 18;
  report(14, "DSL corpus: 18 family expressions lower to the builders exactly", pass,
         std::to_string(entries) + " entries, max diff " + fmt(max_diff));
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  criterion_14();
  std::printf("%d/14 criteria passed in %.1f s\n", 14 - g_failures, seconds_since(t0));
  return g_failures;
}
