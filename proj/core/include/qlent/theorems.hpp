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

#ifndef QLENT_THEOREMS_HPP
#define QLENT_THEOREMS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlent/states.hpp"

namespace qlent {

// The eleven properties of logical entropy and logical divergence that the
// randomized engine certifies on generated instances.
enum class TheoremId {
  Klein,                // d(rho||sigma) >= 0, zero iff rho == sigma
  PureZero,             // L(rho) = 0 for pure states
  MaxMixed,             // L(rho) <= 1 - 1/d, equality at I/d
  PureMarginals,        // bipartite pure state: L(tr_B) = L(tr_A)
  ProductFormula,       // L(a x b) = L(a) + L(b) - L(a) L(b)
  DiagSubadditivity,    // product-basis-diagonal: L(A,B) <= L(A) + L(B)
  MeasurementMonotone,  // projective measurement: L(rho') >= L(rho)
  ConcavityOrthogonal,  // orthogonal supports: sum p_i L(rho_i) < L(mix)
  ConcavityBounds,      // |L(mix) - sum p_i L(rho_i)| <= L(p)
  JointConvexity,       // divergence jointly convex in both arguments
  DivergenceMonotone,   // twirling out B does not increase divergence
};

inline constexpr std::array<TheoremId, 11> kAllTheorems = {
    TheoremId::Klein,           TheoremId::PureZero,
    TheoremId::MaxMixed,        TheoremId::PureMarginals,
    TheoremId::ProductFormula,  TheoremId::DiagSubadditivity,
    TheoremId::MeasurementMonotone, TheoremId::ConcavityOrthogonal,
    TheoremId::ConcavityBounds, TheoremId::JointConvexity,
    TheoremId::DivergenceMonotone,
};

// Stable CLI-facing name ("klein", "product-formula", ...).
std::string_view theorem_name(TheoremId id);
// One-line statement of the checked inequality.
std::string_view theorem_statement(TheoremId id);
// Whether the check consumes bipartite (a x b) dimension specs.
bool theorem_needs_split(TheoremId id);
// Inverse of theorem_name; throws ConfigError listing the valid names.
TheoremId theorem_from_name(std::string_view name);

// Scalar dimension d, or bipartite pair a x b (dim_b == 0 means scalar).
struct DimSpec {
  int dim_a = 0;
  int dim_b = 0;

  static DimSpec scalar(int d) { return DimSpec{d, 0}; }
  static DimSpec pair(int a, int b) { return DimSpec{a, b}; }
  // "4" or "2x3"
  static DimSpec parse(std::string_view text);

  bool bipartite() const { return dim_b > 0; }
  int total() const { return bipartite() ? dim_a * dim_b : dim_a; }
  BipartiteSplit split() const { return BipartiteSplit{dim_a, dim_b}; }
  std::string to_string() const;

  friend bool operator==(const DimSpec&, const DimSpec&) = default;
};

// Comma-separated list: "2,4" or "2x2,2x3".
std::vector<DimSpec> parse_dims(std::string_view text);

struct CheckConfig {
  // Empty selects the per-theorem defaults.
  std::vector<DimSpec> dims;
  int trials = 100;
  std::uint64_t seed = 0;
  double tolerance = tol::kCheckDefault;
};

// Minimal reproduction handle for one failing trial.
struct FailureRecord {
  std::uint64_t trial_seed;
  std::string descriptor;
  double slack;
};

// Outcome of one theorem check. A trial passes when every named slack is
// >= -tolerance (strict sub-checks additionally require > 0); worst_margin
// is the most negative slack seen anywhere.
struct CheckReport {
  TheoremId theorem;
  long trials_run = 0;
  long failures = 0;
  double worst_margin = 0.0;
  // Worst observed slack per named sub-inequality.
  std::map<std::string, double> margins;
  std::vector<FailureRecord> failing_seeds;

  bool passed() const { return failures == 0; }
};

// Named slack values for a single instance, reproducible from
// (theorem, dims, trial_seed) alone. Exposed for failure replay.
std::map<std::string, double> run_trial(TheoremId id, const DimSpec& dims,
                                        std::uint64_t trial_seed);

// Runs `config.trials` independent instances per dimension entry.
// Deterministic in the configuration. Throws ConfigError when a dimension
// entry does not match the theorem's scalar/bipartite requirement.
CheckReport run_check(TheoremId id, const CheckConfig& config);

// Default dimension set used when config.dims is empty.
std::vector<DimSpec> default_dims(TheoremId id);

// Every theorem with per-theorem default dimensions, in kAllTheorems
// order. The aggregate passes iff every report has zero failures.
std::vector<CheckReport> run_all(const CheckConfig& config);

// Exploratory sampler for L(A,B) > L(A) + L(B) over generic correlated
// bipartite states (no product-basis restriction). Returns the first
// violating instance or nullopt. Not a certified property: the outcome is
// recorded, never asserted.
struct ViolationInstance {
  DimSpec dims;
  std::uint64_t trial_seed;
  double excess;  // L(A,B) - L(A) - L(B)
  std::string descriptor;
};
std::optional<ViolationInstance> search_subadditivity_violation(
    const CheckConfig& config);

// L(A,B) - L(A) - L(B) for the instance determined by (dims, trial_seed);
// re-verifies a returned ViolationInstance deterministically.
double subadditivity_excess(const DimSpec& dims, std::uint64_t trial_seed);

}  // namespace qlent

#endif  // QLENT_THEOREMS_HPP
