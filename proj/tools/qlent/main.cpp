// Copyright 2026 The qlent Authors
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
// qlent: logical entropy and logical divergence of density matrices, with
// randomized checks of their structural properties.
//
// Exit codes (stable): 0 success, 1 usage, 2 I/O, 3 parse, 4 validation,
// 5 check failures, 70 internal error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlent/channels.hpp"
#include "qlent/entropy.hpp"
#include "qlent/matrix_io.hpp"
#include "qlent/theorems.hpp"
#include "qlent/version.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qlent;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitParse = 3;
constexpr int kExitValidation = 4;
constexpr int kExitCheckFailed = 5;
constexpr int kExitInternal = 70;

// Deterministic section of every report; wall time stays outside it.
struct Report {
  ordered_json body;

  explicit Report(const std::string& command, const std::vector<std::string>& argv) {
    body["command"] = command;
    body["argv"] = argv;
    body["version"] = kVersion;
    body["inputs"] = ordered_json::array();
  }

  void add_input(const std::string& path, const std::string& bytes) {
    body["inputs"].push_back({{"path", path}, {"digest", fnv1a_hex(bytes)}});
  }
};

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Report& report, bool json_mode, const std::string& human,
          std::chrono::steady_clock::time_point start) {
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  if (json_mode) {
    ordered_json doc;
    doc["report"] = report.body;
    doc["wall_time_ms"] = wall_ms;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << human;
    std::printf("wall time            %.3f ms\n", wall_ms);
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---- entropy ----

struct EntropyArgs {
  std::string path;
  bool purity = false;
  bool von_neumann = false;
  bool spectrum = false;
  bool marginals = false;
  bool all = false;
  std::vector<double> tsallis_q;
  int max_dim = kIoMaxDim;
  bool json = false;
};

int cmd_entropy(const EntropyArgs& args, const std::vector<std::string>& argv,
                std::chrono::steady_clock::time_point start) {
  Report report("entropy", argv);
  const std::string bytes = read_bytes(args.path);
  report.add_input(args.path, bytes);

  MatrixFile file = parse_matrix_json(bytes, args.max_dim);
  const DensityMatrix rho = DensityMatrix::validated(file.matrix);

  const bool want_purity = args.purity || args.all;
  const bool want_vn = args.von_neumann || args.all;
  const bool want_spectrum = args.spectrum || args.all;
  const bool want_marginals = args.marginals || (args.all && file.split.has_value());

  ordered_json results;
  std::ostringstream human;
  human << "state: " << args.path << " (dim " << rho.dim();
  if (!file.label.empty()) human << ", label \"" << file.label << "\"";
  human << ")\n";

  const double l = logical_entropy(rho);
  results["logical_entropy"] = l;
  human << "logical entropy      " << fmt(l) << "\n";

  if (want_purity) {
    results["purity"] = rho.purity();
    human << "purity tr(rho^2)     " << fmt(rho.purity()) << "\n";
  }
  if (want_vn) {
    const double vn = von_neumann_entropy(rho);
    results["von_neumann_entropy"] = vn;
    human << "von Neumann entropy  " << fmt(vn) << "\n";
  }
  for (double q : args.tsallis_q) {
    const double t = tsallis_entropy(rho, q);
    results["tsallis"].push_back({{"q", q}, {"value", t}});
    human << "Tsallis q=" << q << "        " << fmt(t) << "\n";
  }
  if (want_spectrum) {
    const auto spectrum = rho.spectrum();
    results["spectrum"] = spectrum;
    human << "spectrum            ";
    for (double v : spectrum) human << " " << fmt(v);
    human << "\n";
  }
  if (want_marginals) {
    if (!file.split) {
      throw DimensionError("--marginals: state file carries no split");
    }
    const DensityMatrix a =
        DensityMatrix::validated(trace_out_b(rho.matrix(), *file.split));
    const DensityMatrix b =
        DensityMatrix::validated(trace_out_a(rho.matrix(), *file.split));
    results["marginals"] = {{"dim_a", file.split->dim_a},
                            {"dim_b", file.split->dim_b},
                            {"entropy_a", logical_entropy(a)},
                            {"entropy_b", logical_entropy(b)}};
    human << "L(A) [" << file.split->dim_a << "]            "
          << fmt(logical_entropy(a)) << "\n";
    human << "L(B) [" << file.split->dim_b << "]            "
          << fmt(logical_entropy(b)) << "\n";
  }

  report.body["results"] = results;
  emit(report, args.json, human.str(), start);
  return kExitOk;
}

// ---- divergence ----

struct DivergenceArgs {
  std::string rho_path;
  std::string sigma_path;
  int max_dim = kIoMaxDim;
  bool json = false;
};

int cmd_divergence(const DivergenceArgs& args, const std::vector<std::string>& argv,
                   std::chrono::steady_clock::time_point start) {
  Report report("divergence", argv);
  const std::string rho_bytes = read_bytes(args.rho_path);
  const std::string sigma_bytes = read_bytes(args.sigma_path);
  report.add_input(args.rho_path, rho_bytes);
  report.add_input(args.sigma_path, sigma_bytes);

  const DensityMatrix rho =
      DensityMatrix::validated(parse_matrix_json(rho_bytes, args.max_dim).matrix);
  const DensityMatrix sigma =
      DensityMatrix::validated(parse_matrix_json(sigma_bytes, args.max_dim).matrix);
  if (rho.dim() != sigma.dim()) {
    throw DimensionError("divergence: dimension mismatch (" +
                         std::to_string(rho.dim()) + " vs " +
                         std::to_string(sigma.dim()) + ")");
  }

  const double d = logical_divergence(rho, sigma);
  const DivergenceTerms terms = logical_divergence_terms(rho, sigma);

  report.body["results"] = {
      {"divergence", d},
      {"terms",
       {{"cross", terms.cross},
        {"rho_self", terms.rho_self},
        {"sigma_self", terms.sigma_self},
        {"value", terms.value()}}},
  };

  std::ostringstream human;
  human << "divergence d(rho||sigma)        " << fmt(d) << "\n"
        << "  tr rho(1-sigma)               " << fmt(terms.cross) << "\n"
        << "  tr rho(1-rho)/2               " << fmt(terms.rho_self) << "\n"
        << "  tr sigma(1-sigma)/2           " << fmt(terms.sigma_self) << "\n";
  emit(report, args.json, human.str(), start);
  return kExitOk;
}

// ---- check ----

struct CheckArgs {
  std::string selector;
  int trials = 100;
  std::uint64_t seed = 0;
  double tolerance = tol::kCheckDefault;
  std::string dims;
  bool json = false;
};

ordered_json report_to_json(const CheckReport& r) {
  ordered_json j;
  j["theorem"] = std::string(theorem_name(r.theorem));
  j["statement"] = std::string(theorem_statement(r.theorem));
  j["trials_run"] = r.trials_run;
  j["failures"] = r.failures;
  j["worst_margin"] = r.worst_margin;
  j["margins"] = r.margins;
  j["failing_seeds"] = ordered_json::array();
  for (const auto& f : r.failing_seeds) {
    j["failing_seeds"].push_back({{"trial_seed", f.trial_seed},
                                  {"descriptor", f.descriptor},
                                  {"slack", f.slack}});
  }
  return j;
}

void print_report_human(std::ostringstream& out, const CheckReport& r) {
  out << (r.passed() ? "[pass] " : "[FAIL] ") << theorem_name(r.theorem) << ": "
      << r.trials_run << " trials, " << r.failures
      << " failures, worst margin " << fmt(r.worst_margin) << "\n";
  for (const auto& [name, margin] : r.margins) {
    out << "         " << name << ": " << fmt(margin) << "\n";
  }
  for (const auto& f : r.failing_seeds) {
    out << "         replay: " << f.descriptor << " slack=" << fmt(f.slack) << "\n";
  }
}

int cmd_check(const CheckArgs& args, const std::vector<std::string>& argv,
              std::chrono::steady_clock::time_point start) {
  Report report("check", argv);
  CheckConfig config;
  config.trials = args.trials;
  config.seed = args.seed;
  config.tolerance = args.tolerance;
  if (!args.dims.empty()) config.dims = parse_dims(args.dims);

  report.body["options"] = {{"selector", args.selector},
                            {"trials", config.trials},
                            {"seed", config.seed},
                            {"tolerance", config.tolerance},
                            {"dims", args.dims}};

  std::ostringstream human;

  if (args.selector == "subadd-search") {
    const auto found = search_subadditivity_violation(config);
    ordered_json results;
    results["found"] = found.has_value();
    if (found) {
      results["instance"] = {{"dims", found->dims.to_string()},
                             {"trial_seed", found->trial_seed},
                             {"excess", found->excess},
                             {"descriptor", found->descriptor}};
      human << "violation found: " << found->descriptor << "\n";
    } else {
      human << "no violation found in " << config.trials
            << " trials per dimension\n";
    }
    report.body["results"] = results;
    emit(report, args.json, human.str(), start);
    return kExitOk;  // exploratory: the outcome is recorded, not asserted
  }

  std::vector<CheckReport> reports;
  if (args.selector == "all") {
    if (!config.dims.empty()) {
      throw ConfigError("--dims applies to single-theorem checks; "
                        "'check all' uses per-theorem defaults");
    }
    reports = run_all(config);
  } else {
    reports.push_back(run_check(theorem_from_name(args.selector), config));
  }

  long total_failures = 0;
  ordered_json json_reports = ordered_json::array();
  for (const auto& r : reports) {
    total_failures += r.failures;
    json_reports.push_back(report_to_json(r));
    print_report_human(human, r);
  }
  report.body["results"] = {{"reports", json_reports},
                            {"total_failures", total_failures}};
  human << (total_failures == 0 ? "all checks passed\n"
                                : "CHECK FAILURES PRESENT\n");
  emit(report, args.json, human.str(), start);
  return total_failures == 0 ? kExitOk : kExitCheckFailed;
}

// ---- random ----

struct RandomArgs {
  int dim = 2;
  int rank = 0;  // 0: defaults to dim
  std::uint64_t seed = 0;
  std::string out;
  bool json = false;
};

int cmd_random(const RandomArgs& args, const std::vector<std::string>& argv,
               std::chrono::steady_clock::time_point start) {
  Report report("random", argv);
  const int rank = args.rank == 0 ? args.dim : args.rank;
  const DensityMatrix rho = random_density(args.dim, rank, args.seed);

  MatrixFile file{rho.matrix(), std::nullopt,
                  "ginibre d=" + std::to_string(args.dim) +
                      " r=" + std::to_string(rank) +
                      " s=" + std::to_string(args.seed)};
  const std::string text = to_matrix_json(file);
  {
    std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + args.out + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failure on '" + args.out + "'");
  }

  report.body["results"] = {{"path", args.out},
                            {"digest", fnv1a_hex(text)},
                            {"dim", args.dim},
                            {"rank", rank},
                            {"seed", args.seed},
                            {"logical_entropy", logical_entropy(rho)},
                            {"purity", rho.purity()}};
  std::ostringstream human;
  human << "wrote " << args.out << " (dim " << args.dim << ", rank " << rank
        << ", seed " << args.seed << ")\n"
        << "logical entropy      " << fmt(logical_entropy(rho)) << "\n";
  emit(report, args.json, human.str(), start);
  return kExitOk;
}

// ---- twirl ----

struct TwirlArgs {
  std::string path;
  std::string out;
  int max_dim = kIoMaxDim;
  bool json = false;
};

int cmd_twirl(const TwirlArgs& args, const std::vector<std::string>& argv,
              std::chrono::steady_clock::time_point start) {
  Report report("twirl", argv);
  const std::string bytes = read_bytes(args.path);
  report.add_input(args.path, bytes);

  MatrixFile file = parse_matrix_json(bytes, args.max_dim);
  if (!file.split) {
    throw DimensionError("twirl: state file carries no split");
  }
  const DensityMatrix rho = DensityMatrix::validated(file.matrix);
  const DensityMatrix twirled = twirl_subsystem_b(rho, *file.split);

  const ComplexMatrix direct = tensor_product(
      trace_out_b(rho.matrix(), *file.split),
      (1.0 / file.split->dim_b) * ComplexMatrix::identity(file.split->dim_b));
  const double residual =
      std::sqrt(frobenius_distance_sq(twirled.matrix(), direct.symmetrized()));

  MatrixFile out_file{twirled.matrix(), file.split,
                      file.label.empty() ? "twirled" : "twirled " + file.label};
  write_matrix_file(args.out, out_file);

  report.body["results"] = {
      {"path", args.out},
      {"digest", fnv1a_hex(to_matrix_json(out_file))},
      {"split", {file.split->dim_a, file.split->dim_b}},
      {"residual_vs_partial_trace", residual},
      {"logical_entropy_in", logical_entropy(rho)},
      {"logical_entropy_out", logical_entropy(twirled)}};

  std::ostringstream human;
  human << "wrote " << args.out << " (twirl over B of " << file.split->dim_a << "x"
        << file.split->dim_b << " state)\n"
        << "residual vs tr_B(rho) x I/b     " << fmt(residual) << "\n"
        << "logical entropy in -> out       " << fmt(logical_entropy(rho)) << " -> "
        << fmt(logical_entropy(twirled)) << "\n";
  emit(report, args.json, human.str(), start);
  return kExitOk;
}

// ---- measure ----

struct MeasureArgs {
  std::string state_path;
  std::string projector_path;
  std::string out;
  int max_dim = kIoMaxDim;
  bool json = false;
};

int cmd_measure(const MeasureArgs& args, const std::vector<std::string>& argv,
                std::chrono::steady_clock::time_point start) {
  Report report("measure", argv);
  const std::string state_bytes = read_bytes(args.state_path);
  const std::string proj_bytes = read_bytes(args.projector_path);
  report.add_input(args.state_path, state_bytes);
  report.add_input(args.projector_path, proj_bytes);

  MatrixFile file = parse_matrix_json(state_bytes, args.max_dim);
  const DensityMatrix rho = DensityMatrix::validated(file.matrix);

  const ProjectiveMeasurement m = ProjectiveMeasurement::validated(
      read_projector_file(args.projector_path, args.max_dim));
  const DensityMatrix measured = measure(rho, m);

  if (!args.out.empty()) {
    MatrixFile out_file{measured.matrix(), file.split,
                        file.label.empty() ? "measured" : "measured " + file.label};
    write_matrix_file(args.out, out_file);
    report.body["results"]["path"] = args.out;
    report.body["results"]["digest"] = fnv1a_hex(to_matrix_json(out_file));
  }

  const double l_in = logical_entropy(rho);
  const double l_out = logical_entropy(measured);
  report.body["results"]["projectors"] = m.size();
  report.body["results"]["logical_entropy_in"] = l_in;
  report.body["results"]["logical_entropy_out"] = l_out;
  report.body["results"]["entropy_gain"] = l_out - l_in;

  std::ostringstream human;
  human << "measured with " << m.size() << " projectors\n"
        << "logical entropy in -> out       " << fmt(l_in) << " -> " << fmt(l_out)
        << "\n"
        << "entropy gain                    " << fmt(l_out - l_in) << "\n";
  if (!args.out.empty()) human << "wrote " << args.out << "\n";
  emit(report, args.json, human.str(), start);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> argv_echo(argv, argv + argc);

  CLI::App app{"logical entropy and logical divergence of density matrices"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  EntropyArgs entropy_args;
  auto* entropy_cmd =
      app.add_subcommand("entropy", "logical entropy of a state file");
  entropy_cmd->add_option("file", entropy_args.path, "density matrix JSON file")
      ->required();
  entropy_cmd->add_flag("--purity", entropy_args.purity, "also report tr(rho^2)");
  entropy_cmd->add_flag("--von-neumann", entropy_args.von_neumann,
                        "also report von Neumann entropy (natural log)");
  entropy_cmd->add_option("--tsallis", entropy_args.tsallis_q,
                          "also report Tsallis entropy at this q (repeatable)");
  entropy_cmd->add_flag("--spectrum", entropy_args.spectrum,
                        "also report the eigenvalue spectrum");
  entropy_cmd->add_flag("--marginals", entropy_args.marginals,
                        "also report marginal entropies (needs a split)");
  entropy_cmd->add_flag("--all", entropy_args.all,
                        "purity, von Neumann, spectrum and marginals when split");
  entropy_cmd->add_option("--max-dim", entropy_args.max_dim,
                          "cap on accepted matrix dimension");
  entropy_cmd->add_flag("--json", entropy_args.json, "machine-readable report");

  DivergenceArgs divergence_args;
  auto* divergence_cmd =
      app.add_subcommand("divergence", "logical divergence of two state files");
  divergence_cmd->add_option("rho", divergence_args.rho_path, "first state file")
      ->required();
  divergence_cmd->add_option("sigma", divergence_args.sigma_path, "second state file")
      ->required();
  divergence_cmd->add_option("--max-dim", divergence_args.max_dim,
                             "cap on accepted matrix dimension");
  divergence_cmd->add_flag("--json", divergence_args.json, "machine-readable report");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand(
      "check", "randomized verification of entropy/divergence properties");
  check_cmd->add_option("selector", check_args.selector,
                        "theorem name, 'all', or 'subadd-search'")
      ->required();
  check_cmd->add_option("--trials", check_args.trials, "instances per dimension");
  check_cmd->add_option("--seed", check_args.seed, "base seed");
  check_cmd->add_option("--tol", check_args.tolerance, "slack tolerance");
  check_cmd->add_option("--dims", check_args.dims,
                        "dimension list, e.g. '2,4' or '2x2,2x3'");
  check_cmd->add_flag("--json", check_args.json, "machine-readable report");

  RandomArgs random_args;
  auto* random_cmd =
      app.add_subcommand("random", "sample a random density matrix to a file");
  random_cmd->add_option("--dim", random_args.dim, "dimension")->required();
  random_cmd->add_option("--rank", random_args.rank,
                         "rank of the sampled state (default: dim)");
  random_cmd->add_option("--seed", random_args.seed, "generator seed");
  random_cmd->add_option("--out", random_args.out, "output path")->required();
  random_cmd->add_flag("--json", random_args.json, "machine-readable report");

  TwirlArgs twirl_args;
  auto* twirl_cmd = app.add_subcommand(
      "twirl", "apply the subsystem-B twirl to a split-tagged state file");
  twirl_cmd->add_option("file", twirl_args.path, "split-tagged state file")
      ->required();
  twirl_cmd->add_option("--out", twirl_args.out, "output path")->required();
  twirl_cmd->add_option("--max-dim", twirl_args.max_dim,
                        "cap on accepted matrix dimension");
  twirl_cmd->add_flag("--json", twirl_args.json, "machine-readable report");

  MeasureArgs measure_args;
  auto* measure_cmd = app.add_subcommand(
      "measure", "apply a projective measurement read from a projector file");
  measure_cmd->add_option("state", measure_args.state_path, "state file")->required();
  measure_cmd->add_option("projectors", measure_args.projector_path,
                          "projector-set file")
      ->required();
  measure_cmd->add_option("--out", measure_args.out, "output path for rho'");
  measure_cmd->add_option("--max-dim", measure_args.max_dim,
                          "cap on accepted matrix dimension");
  measure_cmd->add_flag("--json", measure_args.json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(entropy_cmd))
      return cmd_entropy(entropy_args, argv_echo, start);
    if (app.got_subcommand(divergence_cmd))
      return cmd_divergence(divergence_args, argv_echo, start);
    if (app.got_subcommand(check_cmd))
      return cmd_check(check_args, argv_echo, start);
    if (app.got_subcommand(random_cmd))
      return cmd_random(random_args, argv_echo, start);
    if (app.got_subcommand(twirl_cmd))
      return cmd_twirl(twirl_args, argv_echo, start);
    if (app.got_subcommand(measure_cmd))
      return cmd_measure(measure_args, argv_echo, start);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    // validation-class failures: density invariants, measurement
    // definition, dimension mismatches, solver trouble
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
