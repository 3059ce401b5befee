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

#ifndef QLENT_STATES_HPP
#define QLENT_STATES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qlent/complex_matrix.hpp"
#include "qlent/eigen.hpp"
#include "qlent/rng.hpp"

namespace qlent {

// Validated quantum state: Hermitian (within tolerance, then symmetrized),
// unit trace, positive semidefinite. Construction is the only validation
// gate; every instance in circulation satisfies the invariants.
class DensityMatrix {
 public:
  // Throws ValidationError naming the violated invariant and its deviation.
  static DensityMatrix validated(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return matrix_.dim(); }

  // tr(rho^2)
  double purity() const { return trace_of_square(matrix_); }
  std::vector<double> spectrum() const { return hermitian_eigen(matrix_).eigenvalues; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

// Unit-norm complex vector, optionally tagged with a bipartite split.
// Global phase is not normalized; every contract downstream is
// phase-invariant.
class PureState {
 public:
  static PureState validated(std::vector<Complex> amplitudes,
                             std::optional<BipartiteSplit> split = std::nullopt);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  const std::optional<BipartiteSplit>& split() const { return split_; }

  // |psi><psi|
  ComplexMatrix projector() const;
  DensityMatrix to_density() const { return DensityMatrix::validated(projector()); }

 private:
  PureState(std::vector<Complex> amplitudes, std::optional<BipartiteSplit> split)
      : amplitudes_(std::move(amplitudes)), split_(split) {}

  std::vector<Complex> amplitudes_;
  std::optional<BipartiteSplit> split_;
};

// Convex combination of density matrices of equal dimension.
class MixtureEnsemble {
 public:
  // weights non-negative, summing to 1 within tolerance; >= 1 component.
  static MixtureEnsemble validated(std::vector<double> weights,
                                   std::vector<DensityMatrix> components);

  int size() const { return static_cast<int>(weights_.size()); }
  int dim() const { return components_.front().dim(); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<DensityMatrix>& components() const { return components_; }

  // sum_i p_i rho_i, revalidated
  DensityMatrix mixture() const;

 private:
  MixtureEnsemble(std::vector<double> weights, std::vector<DensityMatrix> components)
      : weights_(std::move(weights)), components_(std::move(components)) {}

  std::vector<double> weights_;
  std::vector<DensityMatrix> components_;
};

// |psi> = sum_k c_k |a_k> x |b_k> with orthonormal factors, c_k > 0
// descending. Reconstruction contract:
//   amplitudes[a * dim_b + b] = sum_k c_k * left[k][a] * right[k][b].
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  std::vector<std::vector<Complex>> left_vectors;
  std::vector<std::vector<Complex>> right_vectors;
};

// Schmidt decomposition of a split-tagged pure state, computed from the
// eigendecomposition of the dimA x dimA Gram matrix of the coefficient
// matrix. Coefficients below the rank cutoff are dropped.
SchmidtDecomposition schmidt(const PureState& psi);

// Purification |eta> = sum_i sqrt(lambda_i) |e_i> x |i> over the nonzero
// eigen-ensemble of rho; ancilla dimension equals the numerical rank.
// Returns a state with split (dim, rank); tracing out the ancilla
// reproduces rho.
PureState purify(const DensityMatrix& rho);

// rho = G G^dagger / tr(G G^dagger) for a dim x rank complex Ginibre G
// drawn from the seeded generator. Deterministic in (dim, rank, seed).
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);
DensityMatrix random_density(int dim, int rank, Rng& rng);

// Normalized Ginibre vector; with a split it is a generic entangled state.
PureState random_pure(int dim, Rng& rng);
PureState random_bipartite_pure(const BipartiteSplit& split, Rng& rng);

// Haar-like random unitary: Gram-Schmidt orthonormalization of a square
// Ginibre matrix (with one re-orthogonalization pass).
ComplexMatrix random_unitary(int dim, Rng& rng);

// Flat Dirichlet weights: normalized i.i.d. exponentials.
std::vector<double> random_probability_vector(int n, Rng& rng);

}  // namespace qlent

#endif  // QLENT_STATES_HPP
