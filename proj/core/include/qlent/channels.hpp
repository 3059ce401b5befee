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

#ifndef QLENT_CHANNELS_HPP
#define QLENT_CHANNELS_HPP

#include <vector>

#include "qlent/states.hpp"

namespace qlent {

// Complete set of orthogonal projectors: sum_i P_i = I and
// P_i P_j = delta_ij P_j, both within tolerance.
class ProjectiveMeasurement {
 public:
  // Throws MeasurementError naming the violated invariant.
  static ProjectiveMeasurement validated(std::vector<ComplexMatrix> projectors);
  // The rank-1 set {|i><i|}.
  static ProjectiveMeasurement computational_basis(int dim);

  int dim() const { return projectors_.front().dim(); }
  int size() const { return static_cast<int>(projectors_.size()); }
  const std::vector<ComplexMatrix>& projectors() const { return projectors_; }

 private:
  explicit ProjectiveMeasurement(std::vector<ComplexMatrix> projectors)
      : projectors_(std::move(projectors)) {}
  std::vector<ComplexMatrix> projectors_;
};

// Post-measurement state rho' = sum_i P_i rho P_i. Output is revalidated;
// a failure there is a bug signal, not user error.
DensityMatrix measure(const DensityMatrix& rho, const ProjectiveMeasurement& m);

// Random complete measurement: a Haar-like basis grouped into consecutive
// column blocks by a seeded random composition of the dimension, so both
// rank-1 and coarse projectors occur. `min_parts` bounds the block count
// from below (1 allows the trivial single-projector set).
ProjectiveMeasurement random_projective_measurement(int dim, Rng& rng,
                                                    int min_parts = 1);

// Seeded random composition of n into parts >= 1 (at least min_parts).
std::vector<int> random_composition(int n, Rng& rng, int min_parts = 1);

struct FlaggedMixture {
  DensityMatrix state;
  BipartiteSplit split;
};

// Flag-register embedding of an ensemble: the block-diagonal state
// sum_i p_i rho_i x |i><i| on dimension d*k with split (d, k). Its B
// marginal is diag(p); its A marginal is the plain mixture.
FlaggedMixture mix_with_flags(const MixtureEnsemble& ensemble);

// Weighted family of unitaries of one dimension.
struct UnitaryMixture {
  std::vector<double> weights;
  std::vector<ComplexMatrix> unitaries;
};

// The b^2 discrete Weyl operators W_{a,c} = X^a Z^c (X the cyclic shift,
// Z the diagonal of b-th roots of unity) with uniform weights 1/b^2,
// enumerated in fixed (a, then c) order. Averaging M over the family
// yields tr(M) I / b for every b x b matrix M. Requires b >= 2.
UnitaryMixture weyl_mixture(int b);

// Single Weyl operator X^a Z^c.
ComplexMatrix weyl_operator(int b, int a, int c);

// Applies the mixture {1/b^2, I_A x W_j} over subsystem B, realizing the
// partial trace as a unitary mixture: the result equals
// trace_out_b(rho) x I/b. Terms are accumulated in fixed index order.
DensityMatrix twirl_subsystem_b(const DensityMatrix& rho_ab,
                                const BipartiteSplit& split);

}  // namespace qlent

#endif  // QLENT_CHANNELS_HPP
