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

#include "qlent/entropy.hpp"

#include <cmath>
#include <string>

namespace qlent {

namespace {

// clamp round-off noise, reject anything that signals a real defect
double clamp_entropy(double v, const char* context) {
  if (v < -tol::kEntropyNegativity) {
    throw Error(std::string(context) + ": value " + std::to_string(v) +
                " is negative beyond round-off");
  }
  if (v < 0.0) return 0.0;
  if (v > 1.0) return 1.0;
  return v;
}

}  // namespace

double logical_entropy(const DensityMatrix& rho) {
  return clamp_entropy(1.0 - trace_of_square(rho.matrix()), "logical_entropy");
}

double logical_entropy_spectral(const DensityMatrix& rho) {
  double sum_sq = 0.0;
  for (double lambda : rho.spectrum()) sum_sq += lambda * lambda;
  return clamp_entropy(1.0 - sum_sq, "logical_entropy_spectral");
}

double logical_divergence(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return 0.5 * frobenius_distance_sq(rho.matrix(), sigma.matrix());
}

DivergenceTerms logical_divergence_terms(const DensityMatrix& rho,
                                         const DensityMatrix& sigma) {
  const double cross = 1.0 - hermitian_inner(rho.matrix(), sigma.matrix());
  const double rho_self = 0.5 * (1.0 - trace_of_square(rho.matrix()));
  const double sigma_self = 0.5 * (1.0 - trace_of_square(sigma.matrix()));
  return DivergenceTerms{cross, rho_self, sigma_self};
}

double distribution_logical_entropy(const ProbabilityVector& p) {
  return distribution_logical_entropy(p.entries());
}

double distribution_logical_entropy(const std::vector<double>& weights) {
  double sum_sq = 0.0;
  for (double p : weights) sum_sq += p * p;
  return clamp_entropy(1.0 - sum_sq, "distribution_logical_entropy");
}

double tsallis_entropy(const DensityMatrix& rho, double q) {
  if (!(q > 0.0)) {
    throw ConfigError("tsallis_entropy: q must be positive, got " + std::to_string(q));
  }
  if (std::abs(q - 1.0) < 1e-12) {
    throw ConfigError("tsallis_entropy: q = 1 is excluded");
  }
  // eigenvalues below the rank cutoff are numerical noise; x^q amplifies
  // them badly for q < 1
  double sum = 0.0;
  for (double lambda : rho.spectrum()) {
    if (lambda > tol::kRankCutoff) sum += std::pow(lambda, q);
  }
  return (1.0 - sum) / (q - 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double h = 0.0;
  for (double lambda : rho.spectrum()) {
    if (lambda > tol::kRankCutoff) h -= lambda * std::log(lambda);
  }
  return h;
}

}  // namespace qlent
