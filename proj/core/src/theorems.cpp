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

#include "qlent/theorems.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qlent/channels.hpp"
#include "qlent/entropy.hpp"

namespace qlent {

namespace {

using Slacks = std::map<std::string, double>;

int theorem_index(TheoremId id) {
  for (std::size_t i = 0; i < kAllTheorems.size(); ++i)
    if (kAllTheorems[i] == id) return static_cast<int>(i);
  throw ConfigError("unknown theorem id");
}

// Sub-checks whose name carries this prefix must be strictly positive;
// everything else passes at slack >= -tolerance.
bool is_strict(const std::string& name) { return name.rfind("strict", 0) == 0; }

DensityMatrix random_state(int dim, Rng& rng) {
  return random_density(dim, rng.uniform_int(1, dim), rng);
}

DensityMatrix validated_marginal(const ComplexMatrix& m, const BipartiteSplit& split,
                                 Subsystem traced_out) {
  return DensityMatrix::validated(partial_trace(m, split, traced_out));
}

Slacks check_klein(const DimSpec& d, Rng& rng) {
  const DensityMatrix rho = random_state(d.dim_a, rng);
  const DensityMatrix sigma = random_state(d.dim_a, rng);
  return {
      {"nonnegative", logical_divergence(rho, sigma)},
      {"self-zero", -logical_divergence(rho, rho)},
  };
}

Slacks check_pure_zero(const DimSpec& d, Rng& rng) {
  const DensityMatrix rho = random_density(d.dim_a, 1, rng);
  return {{"pure-zero", -logical_entropy(rho)}};
}

Slacks check_max_mixed(const DimSpec& d, Rng& rng) {
  const int n = d.dim_a;
  const double cap = 1.0 - 1.0 / n;
  const DensityMatrix rho = random_state(n, rng);
  const DensityMatrix mixed =
      DensityMatrix::validated((1.0 / n) * ComplexMatrix::identity(n));
  return {
      {"upper-bound", cap - logical_entropy(rho)},
      {"equality-at-max-mixed", -std::abs(logical_entropy(mixed) - cap)},
  };
}

Slacks check_pure_marginals(const DimSpec& d, Rng& rng) {
  const BipartiteSplit split = d.split();
  const PureState psi = random_bipartite_pure(split, rng);
  const ComplexMatrix proj = psi.projector();
  const double la = logical_entropy(validated_marginal(proj, split, Subsystem::B));
  const double lb = logical_entropy(validated_marginal(proj, split, Subsystem::A));
  return {{"marginal-equality", -std::abs(la - lb)}};
}

Slacks check_product_formula(const DimSpec& d, Rng& rng) {
  const DensityMatrix a = random_state(d.dim_a, rng);
  const DensityMatrix b = random_state(d.dim_b, rng);
  const DensityMatrix joint =
      DensityMatrix::validated(tensor_product(a.matrix(), b.matrix()));
  const double la = logical_entropy(a);
  const double lb = logical_entropy(b);
  const double expected = la + lb - la * lb;
  return {{"product-formula", -std::abs(logical_entropy(joint) - expected)}};
}

Slacks check_diag_subadditivity(const DimSpec& d, Rng& rng) {
  const BipartiteSplit split = d.split();
  const std::vector<double> p = random_probability_vector(split.total(), rng);
  const DensityMatrix joint = DensityMatrix::validated(ComplexMatrix::diagonal(p));
  const double la =
      logical_entropy(validated_marginal(joint.matrix(), split, Subsystem::B));
  const double lb =
      logical_entropy(validated_marginal(joint.matrix(), split, Subsystem::A));
  return {{"subadditive", la + lb - logical_entropy(joint)}};
}

Slacks check_measurement_monotone(const DimSpec& d, Rng& rng) {
  const DensityMatrix rho = random_state(d.dim_a, rng);
  const ProjectiveMeasurement m = random_projective_measurement(d.dim_a, rng);
  const DensityMatrix measured = measure(rho, m);
  return {{"monotone", logical_entropy(measured) - logical_entropy(rho)}};
}

// Mixture of k >= 2 components living on orthogonal column blocks of one
// random basis. Weights are resampled until none is degenerate, keeping
// the strict form of the concavity statement testable.
Slacks check_concavity_orthogonal(const DimSpec& d, Rng& rng) {
  const int n = d.dim_a;
  const ComplexMatrix basis = random_unitary(n, rng);
  const std::vector<int> parts = random_composition(n, rng, 2);
  const int k = static_cast<int>(parts.size());

  std::vector<double> weights;
  for (int attempt = 0; attempt < 100; ++attempt) {
    weights = random_probability_vector(k, rng);
    double lo = 1.0;
    for (double w : weights) lo = std::min(lo, w);
    if (lo >= 0.05 / k) break;
  }

  ComplexMatrix mix(n);
  double average = 0.0;
  int col = 0;
  for (int i = 0; i < k; ++i) {
    const int part = parts[i];
    const DensityMatrix small = random_state(part, rng);
    ComplexMatrix embedded(n);
    for (int c = 0; c < part; ++c)
      for (int cc = 0; cc < part; ++cc) {
        const Complex v = small.matrix()(c, cc);
        if (v == Complex(0.0, 0.0)) continue;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            embedded(x, y) += v * basis(x, col + c) * std::conj(basis(y, col + cc));
      }
    average += weights[i] * logical_entropy(DensityMatrix::validated(embedded));
    mix += weights[i] * embedded;
    col += part;
  }
  const double gap =
      logical_entropy(DensityMatrix::validated(mix)) - average;
  return {{"strict-gap", gap}};
}

Slacks check_concavity_bounds(const DimSpec& d, Rng& rng) {
  const int n = d.dim_a;
  const int k = rng.uniform_int(2, 4);
  const std::vector<double> weights = random_probability_vector(k, rng);

  std::vector<DensityMatrix> components;
  components.reserve(k);
  double average = 0.0;
  for (int i = 0; i < k; ++i) {
    components.push_back(random_state(n, rng));
    average += weights[i] * logical_entropy(components.back());
  }
  const MixtureEnsemble ensemble = MixtureEnsemble::validated(weights, components);
  const double mixed = logical_entropy(ensemble.mixture());
  const double lp = distribution_logical_entropy(weights);
  return {
      {"lower-bound", mixed - (average - lp)},
      {"upper-bound", (average + lp) - mixed},
  };
}

Slacks check_joint_convexity(const DimSpec& d, Rng& rng) {
  const int n = d.dim_a;
  const DensityMatrix rho1 = random_state(n, rng);
  const DensityMatrix rho2 = random_state(n, rng);
  const DensityMatrix sig1 = random_state(n, rng);
  const DensityMatrix sig2 = random_state(n, rng);
  const double lambda = rng.uniform();

  const DensityMatrix mix_rho = DensityMatrix::validated(
      lambda * rho1.matrix() + (1.0 - lambda) * rho2.matrix());
  const DensityMatrix mix_sig = DensityMatrix::validated(
      lambda * sig1.matrix() + (1.0 - lambda) * sig2.matrix());

  const double rhs = lambda * logical_divergence(rho1, sig1) +
                     (1.0 - lambda) * logical_divergence(rho2, sig2);
  return {{"joint-convexity", rhs - logical_divergence(mix_rho, mix_sig)}};
}

Slacks check_divergence_monotone(const DimSpec& d, Rng& rng) {
  const BipartiteSplit split = d.split();
  const int n = split.total();
  const DensityMatrix rho = random_state(n, rng);
  const DensityMatrix sigma = random_state(n, rng);

  const DensityMatrix rho_twirled = twirl_subsystem_b(rho, split);
  const DensityMatrix sigma_twirled = twirl_subsystem_b(sigma, split);

  const ComplexMatrix eye_b =
      (1.0 / split.dim_b) * ComplexMatrix::identity(split.dim_b);
  const DensityMatrix rho_direct = DensityMatrix::validated(
      tensor_product(trace_out_b(rho.matrix(), split), eye_b));
  const DensityMatrix sigma_direct = DensityMatrix::validated(
      tensor_product(trace_out_b(sigma.matrix(), split), eye_b));

  const double d_full = logical_divergence(rho, sigma);
  const double d_twirled = logical_divergence(rho_twirled, sigma_twirled);
  const double d_direct = logical_divergence(rho_direct, sigma_direct);

  const double identity_residual = std::max(
      std::sqrt(frobenius_distance_sq(rho_twirled.matrix(), rho_direct.matrix())),
      std::sqrt(frobenius_distance_sq(sigma_twirled.matrix(), sigma_direct.matrix())));

  return {
      {"monotone", d_full - d_twirled},
      {"twirl-identity", -identity_residual},
      {"two-path", -std::abs(d_twirled - d_direct)},
  };
}

std::string make_descriptor(TheoremId id, const DimSpec& dims, int trial,
                            std::uint64_t trial_seed) {
  std::ostringstream out;
  out << theorem_name(id) << " dims=" << dims.to_string() << " trial=" << trial
      << " trial_seed=" << trial_seed;
  return out.str();
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Klein: return "klein";
    case TheoremId::PureZero: return "pure-zero";
    case TheoremId::MaxMixed: return "max-mixed";
    case TheoremId::PureMarginals: return "pure-marginals";
    case TheoremId::ProductFormula: return "product-formula";
    case TheoremId::DiagSubadditivity: return "diag-subadditivity";
    case TheoremId::MeasurementMonotone: return "measurement-monotone";
    case TheoremId::ConcavityOrthogonal: return "concavity-orthogonal";
    case TheoremId::ConcavityBounds: return "concavity-bounds";
    case TheoremId::JointConvexity: return "joint-convexity";
    case TheoremId::DivergenceMonotone: return "divergence-monotone";
  }
  throw ConfigError("unknown theorem id");
}

std::string_view theorem_statement(TheoremId id) {
  switch (id) {
    case TheoremId::Klein:
      return "d(rho||sigma) >= 0 with equality iff rho == sigma";
    case TheoremId::PureZero:
      return "L(rho) == 0 for every pure state";
    case TheoremId::MaxMixed:
      return "L(rho) <= 1 - 1/d with equality at the maximally mixed state";
    case TheoremId::PureMarginals:
      return "both marginals of a bipartite pure state have equal logical entropy";
    case TheoremId::ProductFormula:
      return "L(a (x) b) == L(a) + L(b) - L(a)L(b)";
    case TheoremId::DiagSubadditivity:
      return "states diagonal in a product basis satisfy L(A,B) <= L(A) + L(B)";
    case TheoremId::MeasurementMonotone:
      return "projective measurement cannot decrease logical entropy";
    case TheoremId::ConcavityOrthogonal:
      return "mixtures with orthogonal supports strictly beat the average entropy";
    case TheoremId::ConcavityBounds:
      return "L(mixture) lies within L(p) of the weighted component entropy";
    case TheoremId::JointConvexity:
      return "logical divergence is jointly convex in its two arguments";
    case TheoremId::DivergenceMonotone:
      return "twirling out subsystem B cannot increase logical divergence";
  }
  throw ConfigError("unknown theorem id");
}

bool theorem_needs_split(TheoremId id) {
  switch (id) {
    case TheoremId::PureMarginals:
    case TheoremId::ProductFormula:
    case TheoremId::DiagSubadditivity:
    case TheoremId::DivergenceMonotone:
      return true;
    default:
      return false;
  }
}

TheoremId theorem_from_name(std::string_view name) {
  for (TheoremId id : kAllTheorems)
    if (theorem_name(id) == name) return id;
  std::string message = "unknown theorem '" + std::string(name) + "'; valid names:";
  for (TheoremId id : kAllTheorems)
    message += " " + std::string(theorem_name(id));
  throw ConfigError(message);
}

DimSpec DimSpec::parse(std::string_view text) {
  const auto bad = [&] {
    return ConfigError("bad dimension spec '" + std::string(text) +
                       "' (expected e.g. '4' or '2x3')");
  };
  const std::size_t x = text.find('x');
  try {
    if (x == std::string_view::npos) {
      const int d = std::stoi(std::string(text));
      if (d < 1) throw bad();
      return scalar(d);
    }
    const int a = std::stoi(std::string(text.substr(0, x)));
    const int b = std::stoi(std::string(text.substr(x + 1)));
    if (a < 1 || b < 1) throw bad();
    return pair(a, b);
  } catch (const std::logic_error&) {
    throw bad();
  }
}

std::string DimSpec::to_string() const {
  if (bipartite()) return std::to_string(dim_a) + "x" + std::to_string(dim_b);
  return std::to_string(dim_a);
}

std::vector<DimSpec> parse_dims(std::string_view text) {
  std::vector<DimSpec> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    if (comma > start) out.push_back(DimSpec::parse(text.substr(start, comma - start)));
    start = comma + 1;
  }
  if (out.empty()) throw ConfigError("empty dimension list");
  return out;
}

std::map<std::string, double> run_trial(TheoremId id, const DimSpec& dims,
                                        std::uint64_t trial_seed) {
  Rng rng(trial_seed);
  switch (id) {
    case TheoremId::Klein: return check_klein(dims, rng);
    case TheoremId::PureZero: return check_pure_zero(dims, rng);
    case TheoremId::MaxMixed: return check_max_mixed(dims, rng);
    case TheoremId::PureMarginals: return check_pure_marginals(dims, rng);
    case TheoremId::ProductFormula: return check_product_formula(dims, rng);
    case TheoremId::DiagSubadditivity: return check_diag_subadditivity(dims, rng);
    case TheoremId::MeasurementMonotone: return check_measurement_monotone(dims, rng);
    case TheoremId::ConcavityOrthogonal: return check_concavity_orthogonal(dims, rng);
    case TheoremId::ConcavityBounds: return check_concavity_bounds(dims, rng);
    case TheoremId::JointConvexity: return check_joint_convexity(dims, rng);
    case TheoremId::DivergenceMonotone: return check_divergence_monotone(dims, rng);
  }
  throw ConfigError("unknown theorem id");
}

std::vector<DimSpec> default_dims(TheoremId id) {
  switch (id) {
    case TheoremId::Klein:
      return {DimSpec::scalar(2), DimSpec::scalar(3), DimSpec::scalar(4),
              DimSpec::scalar(8)};
    case TheoremId::PureZero:
      return {DimSpec::scalar(2), DimSpec::scalar(4), DimSpec::scalar(8)};
    case TheoremId::MaxMixed:
      return {DimSpec::scalar(2), DimSpec::scalar(3), DimSpec::scalar(4),
              DimSpec::scalar(8), DimSpec::scalar(16)};
    case TheoremId::PureMarginals:
      return {DimSpec::pair(2, 2), DimSpec::pair(2, 3), DimSpec::pair(3, 4)};
    case TheoremId::ProductFormula:
      return {DimSpec::pair(2, 2), DimSpec::pair(2, 3), DimSpec::pair(3, 3)};
    case TheoremId::DiagSubadditivity:
      return {DimSpec::pair(2, 2), DimSpec::pair(2, 3), DimSpec::pair(3, 3)};
    case TheoremId::MeasurementMonotone:
      return {DimSpec::scalar(2), DimSpec::scalar(4), DimSpec::scalar(8)};
    case TheoremId::ConcavityOrthogonal:
      return {DimSpec::scalar(2), DimSpec::scalar(4), DimSpec::scalar(8)};
    case TheoremId::ConcavityBounds:
      return {DimSpec::scalar(2), DimSpec::scalar(3), DimSpec::scalar(4)};
    case TheoremId::JointConvexity:
      return {DimSpec::scalar(2), DimSpec::scalar(4)};
    case TheoremId::DivergenceMonotone:
      return {DimSpec::pair(2, 2), DimSpec::pair(2, 3), DimSpec::pair(3, 2)};
  }
  throw ConfigError("unknown theorem id");
}

CheckReport run_check(TheoremId id, const CheckConfig& config) {
  if (config.trials < 1) throw ConfigError("check config: trials must be >= 1");
  if (!(config.tolerance > 0.0)) throw ConfigError("check config: tolerance must be > 0");

  const std::vector<DimSpec> dims =
      config.dims.empty() ? default_dims(id) : config.dims;
  for (const DimSpec& d : dims) {
    if (d.bipartite() != theorem_needs_split(id)) {
      throw ConfigError(std::string(theorem_name(id)) + " needs " +
                        (theorem_needs_split(id) ? "bipartite (AxB)" : "scalar") +
                        " dimensions, got '" + d.to_string() + "'");
    }
  }

  CheckReport report;
  report.theorem = id;
  report.worst_margin = std::numeric_limits<double>::infinity();

  const std::uint64_t theorem_stream =
      Rng::derive(config.seed, static_cast<std::uint64_t>(theorem_index(id)));
  for (std::size_t di = 0; di < dims.size(); ++di) {
    const std::uint64_t dim_stream = Rng::derive(theorem_stream, di);
    for (int t = 0; t < config.trials; ++t) {
      const std::uint64_t trial_seed = Rng::derive(dim_stream, static_cast<std::uint64_t>(t));
      const Slacks slacks = run_trial(id, dims[di], trial_seed);

      bool pass = true;
      double trial_worst = std::numeric_limits<double>::infinity();
      for (const auto& [name, slack] : slacks) {
        auto [it, inserted] = report.margins.try_emplace(name, slack);
        if (!inserted) it->second = std::min(it->second, slack);
        report.worst_margin = std::min(report.worst_margin, slack);
        trial_worst = std::min(trial_worst, slack);
        if (is_strict(name) ? !(slack > 0.0) : slack < -config.tolerance) pass = false;
      }
      ++report.trials_run;
      if (!pass) {
        ++report.failures;
        report.failing_seeds.push_back(FailureRecord{
            trial_seed, make_descriptor(id, dims[di], t, trial_seed), trial_worst});
      }
    }
  }
  return report;
}

std::vector<CheckReport> run_all(const CheckConfig& config) {
  std::vector<CheckReport> reports;
  reports.reserve(kAllTheorems.size());
  for (TheoremId id : kAllTheorems) {
    CheckConfig derived = config;
    derived.dims = default_dims(id);
    reports.push_back(run_check(id, derived));
  }
  return reports;
}

double subadditivity_excess(const DimSpec& dims, std::uint64_t trial_seed) {
  const BipartiteSplit split = dims.split();
  Rng rng(trial_seed);
  const DensityMatrix joint = random_state(split.total(), rng);
  const double la =
      logical_entropy(validated_marginal(joint.matrix(), split, Subsystem::B));
  const double lb =
      logical_entropy(validated_marginal(joint.matrix(), split, Subsystem::A));
  return logical_entropy(joint) - la - lb;
}

std::optional<ViolationInstance> search_subadditivity_violation(
    const CheckConfig& config) {
  if (config.trials < 1) throw ConfigError("check config: trials must be >= 1");
  std::vector<DimSpec> dims = config.dims;
  if (dims.empty())
    dims = {DimSpec::pair(2, 2), DimSpec::pair(2, 3), DimSpec::pair(3, 3)};
  for (const DimSpec& d : dims) {
    if (!d.bipartite()) {
      throw ConfigError("subadditivity search needs bipartite (AxB) dimensions, got '" +
                        d.to_string() + "'");
    }
  }

  const std::uint64_t search_stream = Rng::derive(config.seed, 0x5ABADD17ULL);
  for (std::size_t di = 0; di < dims.size(); ++di) {
    const std::uint64_t dim_stream = Rng::derive(search_stream, di);
    for (int t = 0; t < config.trials; ++t) {
      const std::uint64_t trial_seed = Rng::derive(dim_stream, static_cast<std::uint64_t>(t));
      const double excess = subadditivity_excess(dims[di], trial_seed);
      if (excess > config.tolerance) {
        std::ostringstream desc;
        desc << "subadditivity-violation dims=" << dims[di].to_string()
             << " trial=" << t << " trial_seed=" << trial_seed
             << " excess=" << excess;
        return ViolationInstance{dims[di], trial_seed, excess, desc.str()};
      }
    }
  }
  return std::nullopt;
}

}  // namespace qlent
