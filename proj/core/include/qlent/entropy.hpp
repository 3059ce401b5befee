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

#ifndef QLENT_ENTROPY_HPP
#define QLENT_ENTROPY_HPP

#include "qlent/partition.hpp"
#include "qlent/states.hpp"

namespace qlent {

// Quantum logical entropy L(rho) = tr(rho(1-rho)) = 1 - tr(rho^2),
// computed from the entrywise trace of rho^2 (no eigensolve). One minus
// the purity; 0 for pure states, 1 - 1/d for the maximally mixed state.
// Round-off negatives clamp to zero; a genuinely negative result throws.
double logical_entropy(const DensityMatrix& rho);

// 1 - sum_i lambda_i^2 over the spectrum. Same quantity through the
// eigensolver; kept as the independent second path.
double logical_entropy_spectral(const DensityMatrix& rho);

// Logical divergence d(rho||sigma) = tr(rho-sigma)^2 / 2: a symmetric,
// non-negative squared distance, zero iff rho == sigma.
double logical_divergence(const DensityMatrix& rho, const DensityMatrix& sigma);

// The three-term form of the divergence,
//   d = tr rho(1-sigma) - tr rho(1-rho)/2 - tr sigma(1-sigma)/2.
// Term-level access for reporting; value() is the independent second path
// of the divergence identity.
struct DivergenceTerms {
  double cross;       // tr rho(1-sigma)
  double rho_self;    // tr rho(1-rho) / 2
  double sigma_self;  // tr sigma(1-sigma) / 2

  double value() const { return cross - rho_self - sigma_self; }
};
DivergenceTerms logical_divergence_terms(const DensityMatrix& rho,
                                         const DensityMatrix& sigma);

// Classical logical entropy of a distribution: 1 - sum_i p_i^2, the
// probability that two independent draws differ.
double distribution_logical_entropy(const ProbabilityVector& p);
double distribution_logical_entropy(const std::vector<double>& weights);

// Tsallis entropy (1 - sum_i lambda_i^q) / (q - 1) for q > 0, q != 1.
// The q = 2 member is the logical entropy.
double tsallis_entropy(const DensityMatrix& rho, double q);

// -sum lambda_i ln(lambda_i) over eigenvalues above the rank cutoff.
// Natural log; comparison baseline only.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace qlent

#endif  // QLENT_ENTROPY_HPP
