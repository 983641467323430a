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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "triwit/cli.hpp"

namespace {

using nlohmann::json;

json load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open job file: " + path);
  json job;
  in >> job;
  return job;
}

// Output goes to --out when given, stdout otherwise.
struct OutputSink {
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement criteria for multipartite operator families"};
  app.require_subcommand(1);

  std::string job_path, out_path, verify_kind;
  std::optional<std::uint64_t> seed_override;
  std::optional<double> tol_override;
  int threads = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_job) {
    auto* opt = cmd->add_option("--job", job_path, "job file (JSON)");
    if (needs_job) opt->required();
    cmd->add_option("--out", out_path, "output file (default: stdout)");
    cmd->add_option("--seed", seed_override, "override the job seed");
    cmd->add_option("--threads", threads, "worker threads for sampling");
    cmd->add_option("--tolerance", tol_override, "override the detection tolerance");
  };

  auto* check = app.add_subcommand("check", "evaluate a criterion on a state");
  add_common(check, true);
  auto* audit = app.add_subcommand("audit", "Monte-Carlo margin audit over an ensemble");
  add_common(audit, true);
  auto* scan = app.add_subcommand("scan", "sweep a state family over a parameter grid (CSV)");
  add_common(scan, true);
  auto* optimize = app.add_subcommand("optimize", "search a state family for violations");
  add_common(optimize, true);
  auto* verify = app.add_subcommand("verify", "run the operator identity suites");
  verify->add_option("kind", verify_kind, "boson3 | boson_n | su2 | su11")->required();
  add_common(verify, false);
  auto* limit = app.add_subcommand("limit", "large-j/large-k reduction study (CSV)");
  add_common(limit, true);

  CLI11_PARSE(app, argc, argv);

  try {
    OutputSink sink(out_path);
    json job = json::object();
    if (!job_path.empty()) job = load_job(job_path);
    if (seed_override) job["seed"] = *seed_override;
    if (tol_override) job["tolerance"] = *tol_override;

    if (check->parsed()) return triwit::cli::run_check(job, sink.stream());
    if (audit->parsed()) return triwit::cli::run_audit(job, sink.stream(), threads);
    if (scan->parsed()) return triwit::cli::run_scan(job, sink.stream());
    if (optimize->parsed()) return triwit::cli::run_optimize(job, sink.stream());
    if (verify->parsed()) return triwit::cli::run_verify(verify_kind, job, sink.stream());
    if (limit->parsed()) return triwit::cli::run_limit(job, sink.stream());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
