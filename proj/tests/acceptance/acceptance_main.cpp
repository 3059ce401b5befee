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
// Acceptance suite: one pass/fail line per criterion, with every tolerance
// and wall-clock budget pinned in code. Exits with the number of failed
// criteria. Criterion 12 drives the CLI binary passed via --cli.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlent/channels.hpp"
#include "qlent/entropy.hpp"
#include "qlent/matrix_io.hpp"
#include "qlent/theorems.hpp"
#include "test_support.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qlent;

struct Context {
  std::string cli_path;
  fs::path work_dir;
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

CheckConfig make_config(std::vector<DimSpec> dims, int trials, double tolerance,
                        std::uint64_t seed) {
  CheckConfig config;
  config.dims = std::move(dims);
  config.trials = trials;
  config.tolerance = tolerance;
  config.seed = seed;
  return config;
}

void require_clean(const CheckReport& report, const std::string& what) {
  if (report.failures != 0) {
    std::ostringstream out;
    out << what << ": " << report.failures << "/" << report.trials_run
        << " trials failed, worst margin " << report.worst_margin;
    if (!report.failing_seeds.empty())
      out << " (first: " << report.failing_seeds.front().descriptor << ")";
    throw Failure(out.str());
  }
}

// 1. exact maximal entropy values
void criterion_max_entropy(Context&) {
  for (int d : {2, 3, 4, 8, 16}) {
    const DensityMatrix mixed =
        DensityMatrix::validated((1.0 / d) * ComplexMatrix::identity(d));
    const double deviation = std::abs(logical_entropy(mixed) - (1.0 - 1.0 / d));
    require(deviation < 1e-12,
            "L(I/d) deviates by " + std::to_string(deviation) + " at d=" +
                std::to_string(d));
  }
}

// 2. rank-1 states have zero entropy
void criterion_purity(Context&) {
  const auto config = make_config(
      {DimSpec::scalar(2), DimSpec::scalar(4), DimSpec::scalar(8)}, 1000, 1e-10,
      20260801);
  require_clean(run_check(TheoremId::PureZero, config), "pure states");
}

// 3. Klein inequality
void criterion_klein(Context&) {
  const auto config = make_config({DimSpec::scalar(2), DimSpec::scalar(3),
                                   DimSpec::scalar(4), DimSpec::scalar(8)},
                                  1000, 1e-9, 20260802);
  const CheckReport report = run_check(TheoremId::Klein, config);
  require_clean(report, "klein");
  require(report.margins.at("self-zero") >= -1e-12,
          "d(rho||rho) exceeded 1e-12");
}

// 4. product formula plus its exact instance
void criterion_product_formula(Context&) {
  const auto config = make_config(
      {DimSpec::pair(2, 2), DimSpec::pair(2, 3), DimSpec::pair(3, 3)}, 1000, 1e-10,
      20260803);
  require_clean(run_check(TheoremId::ProductFormula, config), "product formula");

  const DensityMatrix half =
      DensityMatrix::validated(0.5 * ComplexMatrix::identity(2));
  const DensityMatrix joint =
      DensityMatrix::validated(tensor_product(half.matrix(), half.matrix()));
  require(std::abs(logical_entropy(joint) - 0.75) < 1e-12,
          "L(I2/2 x I2/2) != 0.75");
}

// 5. equal marginal entropies of bipartite pure states
void criterion_pure_marginals(Context&) {
  const auto config = make_config(
      {DimSpec::pair(2, 2), DimSpec::pair(2, 3), DimSpec::pair(3, 4)}, 1000, 1e-10,
      20260804);
  require_clean(run_check(TheoremId::PureMarginals, config), "pure marginals");
}

// 6. subadditivity for product-basis-diagonal joints
void criterion_diag_subadditivity(Context&) {
  const auto config = make_config(
      {DimSpec::pair(2, 2), DimSpec::pair(2, 3), DimSpec::pair(3, 3)}, 1000, 1e-9,
      20260805);
  require_clean(run_check(TheoremId::DiagSubadditivity, config),
                "diagonal subadditivity");
}

// 7. measurement monotonicity, coarse projectors included
void criterion_measurement(Context&) {
  const auto config = make_config(
      {DimSpec::scalar(2), DimSpec::scalar(4), DimSpec::scalar(8)}, 1000, 1e-9,
      20260806);
  require_clean(run_check(TheoremId::MeasurementMonotone, config),
                "measurement monotonicity");
}

// 8. concavity: strict orthogonal-support gap and two-sided bounds
void criterion_concavity(Context&) {
  const auto strict_config = make_config(
      {DimSpec::scalar(2), DimSpec::scalar(4), DimSpec::scalar(8)}, 1000, 1e-9,
      20260807);
  const CheckReport strict = run_check(TheoremId::ConcavityOrthogonal, strict_config);
  require_clean(strict, "orthogonal-support concavity");
  require(strict.margins.at("strict-gap") > 0.0,
          "strict concavity gap not positive");

  const auto bounds_config = make_config(
      {DimSpec::scalar(2), DimSpec::scalar(3), DimSpec::scalar(4)}, 1000, 1e-9,
      20260808);
  require_clean(run_check(TheoremId::ConcavityBounds, bounds_config),
                "concavity bounds");
}

// 9. joint convexity of the divergence
void criterion_joint_convexity(Context&) {
  const auto config =
      make_config({DimSpec::scalar(2), DimSpec::scalar(4)}, 1000, 1e-9, 20260809);
  require_clean(run_check(TheoremId::JointConvexity, config), "joint convexity");
}

// 10. divergence monotonicity plus the twirl identity
void criterion_divergence_monotone(Context&) {
  const auto config = make_config(
      {DimSpec::pair(2, 2), DimSpec::pair(2, 3), DimSpec::pair(3, 2)}, 500, 1e-9,
      20260810);
  const CheckReport report = run_check(TheoremId::DivergenceMonotone, config);
  require_clean(report, "divergence monotonicity");
  require(report.margins.at("twirl-identity") >= -1e-10,
          "twirl identity residual exceeded 1e-10");
}

// 11. two-path oracles: trace vs spectral, squared-difference vs
// three-term, and exact rational dit-counting vs the sum formula
void criterion_two_path(Context&) {
  Rng rng(20260811);
  for (int d : {2, 3, 4, 8}) {
    for (int trial = 0; trial < 250; ++trial) {
      const DensityMatrix rho = random_density(d, rng.uniform_int(1, d), rng);
      const DensityMatrix sigma = random_density(d, rng.uniform_int(1, d), rng);
      require(std::abs(logical_entropy(rho) - logical_entropy_spectral(rho)) < 1e-10,
              "entropy paths diverged at d=" + std::to_string(d));
      const double via_terms = logical_divergence_terms(rho, sigma).value();
      require(std::abs(logical_divergence(rho, sigma) - via_terms) < 1e-10,
              "divergence paths diverged at d=" + std::to_string(d));
    }
  }

  for (int n = 1; n <= 8; ++n) {
    long long visited = 0;
    qlent::test::for_each_partition(n, [&](const ClassicalPartition& pi) {
      ++visited;
      const Rational counted(qlent::test::enumerate_dits(pi),
                             static_cast<std::int64_t>(n) * n);
      require(counted == pi.sum_formula_exact(),
              "dit count disagrees with the sum formula at n=" + std::to_string(n));
      require(pi.logical_entropy_exact() == pi.sum_formula_exact(),
              "entropy paths disagree at n=" + std::to_string(n));
    });
    require(visited > 0, "no partitions visited");
  }
}

// 12. CLI pipeline: bit-stable random -> entropy, and a green full check
struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(Context& ctx, const std::string& args) {
  const fs::path out_path = ctx.work_dir / "stdout.txt";
  const std::string command =
      ctx.cli_path + " " + args + " > " + out_path.string() + " 2>&1";
  const int status = std::system(command.c_str());
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return CliResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void criterion_cli_pipeline(Context& ctx) {
  require(!ctx.cli_path.empty(), "no --cli path given");

  const fs::path f1 = ctx.work_dir / "state1.json";
  const fs::path f2 = ctx.work_dir / "state2.json";
  require(run_cli(ctx, "random --dim 4 --rank 3 --seed 99 --out " + f1.string())
              .exit_code == 0,
          "random (first run) failed");
  require(run_cli(ctx, "random --dim 4 --rank 3 --seed 99 --out " + f2.string())
              .exit_code == 0,
          "random (second run) failed");
  require(slurp(f1) == slurp(f2), "random output not byte-stable");

  const CliResult e1 = run_cli(ctx, "entropy " + f1.string() + " --json");
  const CliResult e2 = run_cli(ctx, "entropy " + f1.string() + " --json");
  require(e1.exit_code == 0 && e2.exit_code == 0, "entropy run failed");
  const json r1 = json::parse(e1.out)["report"];
  const json r2 = json::parse(e2.out)["report"];
  require(r1.dump() == r2.dump(), "entropy report not deterministic");
  const double l1 = r1["results"]["logical_entropy"].get<double>();
  const double l2 = r2["results"]["logical_entropy"].get<double>();
  require(l1 == l2, "entropy value not bit-stable");

  const CliResult check = run_cli(ctx, "check all --trials 200 --seed 42");
  require(check.exit_code == 0, "check all --trials 200 --seed 42 exited " +
                                    std::to_string(check.exit_code));
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<void(Context&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) ctx.cli_path = argv[++i];
  }
  ctx.work_dir = fs::temp_directory_path() /
                 ("qlent-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(ctx.work_dir);

  const std::vector<Criterion> criteria = {
      {1, "max-entropy exact values L(I/d) = 1 - 1/d", 1.0, criterion_max_entropy},
      {2, "rank-1 purity: L < 1e-10 on 1000 states per dim", 10.0, criterion_purity},
      {3, "Klein inequality on 1000 pairs per dim", 10.0, criterion_klein},
      {4, "product formula within 1e-10 plus exact 0.75 instance", 10.0,
       criterion_product_formula},
      {5, "pure-state marginal entropies agree within 1e-10", 10.0,
       criterion_pure_marginals},
      {6, "diagonal subadditivity on 1000 joints per split", 10.0,
       criterion_diag_subadditivity},
      {7, "measurement monotonicity incl. coarse projectors", 30.0,
       criterion_measurement},
      {8, "concavity: strict orthogonal gap and two-sided bounds", 30.0,
       criterion_concavity},
      {9, "joint convexity on 1000 tuples per dim", 10.0, criterion_joint_convexity},
      {10, "divergence monotonicity and twirl identity", 30.0,
       criterion_divergence_monotone},
      {11, "two-path oracles: spectral, three-term, exact rationals", 30.0,
       criterion_two_path},
      {12, "CLI pipeline determinism and green full check", 60.0,
       criterion_cli_pipeline},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.run(ctx);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (error.empty() && seconds > criterion.budget_seconds) {
      std::ostringstream out;
      out << "took " << seconds << "s, budget " << criterion.budget_seconds << "s";
      error = out.str();
    }
    if (error.empty()) {
      std::printf("[PASS] %2d. %s (%.2fs < %.0fs)\n", criterion.number,
                  criterion.name, seconds, criterion.budget_seconds);
    } else {
      std::printf("[FAIL] %2d. %s: %s\n", criterion.number, criterion.name,
                  error.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }

  std::error_code ignore;
  fs::remove_all(ctx.work_dir, ignore);

  std::printf("%d/%d criteria passed\n", static_cast<int>(criteria.size()) - failed,
              static_cast<int>(criteria.size()));
  return failed;
}
