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

#include "qlent/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qlent {

DensityMatrix DensityMatrix::validated(const ComplexMatrix& m) {
  if (!m.all_finite()) {
    throw ValidationError(ValidationError::Kind::Hermiticity,
                          "density validation: matrix has non-finite entries",
                          std::numeric_limits<double>::infinity());
  }
  const double herm_dev = m.hermiticity_deviation();
  if (herm_dev > tol::kHermiticity) {
    throw ValidationError(ValidationError::Kind::Hermiticity,
                          "density validation: not Hermitian (max deviation " +
                              std::to_string(herm_dev) + ")",
                          herm_dev);
  }
  ComplexMatrix sym = m.symmetrized();

  const double trace_dev = std::abs(sym.trace().real() - 1.0);
  if (trace_dev > tol::kValidation) {
    throw ValidationError(ValidationError::Kind::Trace,
                          "density validation: trace deviates from 1 by " +
                              std::to_string(trace_dev),
                          trace_dev);
  }

  const auto eigen = hermitian_eigen(sym);
  const double min_eig = eigen.eigenvalues.back();
  if (min_eig < -tol::kValidation) {
    throw ValidationError(ValidationError::Kind::Positivity,
                          "density validation: negative eigenvalue " +
                              std::to_string(min_eig),
                          -min_eig);
  }
  return DensityMatrix(std::move(sym));
}

PureState PureState::validated(std::vector<Complex> amplitudes,
                               std::optional<BipartiteSplit> split) {
  if (amplitudes.empty()) {
    throw DimensionError("pure state must have at least one amplitude");
  }
  double norm_sq = 0.0;
  for (const auto& a : amplitudes) norm_sq += std::norm(a);
  const double dev = std::abs(std::sqrt(norm_sq) - 1.0);
  if (dev > tol::kValidation) {
    throw ValidationError(ValidationError::Kind::Norm,
                          "pure state: norm deviates from 1 by " + std::to_string(dev),
                          dev);
  }
  if (split) {
    split->require_matches(static_cast<int>(amplitudes.size()), "pure state split");
  }
  return PureState(std::move(amplitudes), split);
}

ComplexMatrix PureState::projector() const {
  const int n = dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
  return out;
}

MixtureEnsemble MixtureEnsemble::validated(std::vector<double> weights,
                                           std::vector<DensityMatrix> components) {
  if (weights.empty() || weights.size() != components.size()) {
    throw ConfigError("mixture ensemble: need equal, nonzero counts of weights "
                      "and components");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw ValidationError(ValidationError::Kind::Weights,
                            "mixture ensemble: negative weight " + std::to_string(w),
                            -w);
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol::kValidation) {
    throw ValidationError(ValidationError::Kind::Weights,
                          "mixture ensemble: weights sum to " + std::to_string(sum),
                          std::abs(sum - 1.0));
  }
  const int d = components.front().dim();
  for (const auto& c : components) c.matrix().require_dim(d, "mixture ensemble");
  return MixtureEnsemble(std::move(weights), std::move(components));
}

DensityMatrix MixtureEnsemble::mixture() const {
  ComplexMatrix acc(dim());
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    acc += weights_[i] * components_[i].matrix();
  }
  return DensityMatrix::validated(acc);
}

SchmidtDecomposition schmidt(const PureState& psi) {
  if (!psi.split()) {
    throw DimensionError("schmidt: pure state carries no bipartite split");
  }
  const int da = psi.split()->dim_a;
  const int db = psi.split()->dim_b;
  const auto& amp = psi.amplitudes();

  // Gram matrix of the da x db coefficient matrix C, C[a][b] = amp[a*db+b]
  ComplexMatrix gram(da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      Complex sum = 0.0;
      for (int b = 0; b < db; ++b)
        sum += amp[i * db + b] * std::conj(amp[static_cast<std::size_t>(j) * db + b]);
      gram(i, j) = sum;
    }

  const auto eigen = hermitian_eigen(gram);
  SchmidtDecomposition out;
  for (int k = 0; k < da; ++k) {
    const double mu = eigen.eigenvalues[k];
    if (mu <= tol::kRankCutoff) break;  // sorted descending
    const double coeff = std::sqrt(mu);
    std::vector<Complex> left = eigen.eigenvector(k);
    // right vector: C^dagger u, normalized; stored conjugated so that
    // reconstruction needs no conjugation
    std::vector<Complex> right(db, Complex(0.0, 0.0));
    double right_norm_sq = 0.0;
    for (int b = 0; b < db; ++b) {
      Complex sum = 0.0;
      for (int a = 0; a < da; ++a)
        sum += std::conj(amp[static_cast<std::size_t>(a) * db + b]) * left[a];
      right[b] = std::conj(sum);
      right_norm_sq += std::norm(sum);
    }
    const double right_scale = 1.0 / std::sqrt(right_norm_sq);
    for (auto& v : right) v *= right_scale;
    out.coefficients.push_back(coeff);
    out.left_vectors.push_back(std::move(left));
    out.right_vectors.push_back(std::move(right));
  }
  return out;
}

PureState purify(const DensityMatrix& rho) {
  const auto eigen = hermitian_eigen(rho.matrix());
  const int d = rho.dim();

  int rank = 0;
  for (double lambda : eigen.eigenvalues)
    if (lambda > tol::kRankCutoff) ++rank;
  rank = std::max(rank, 1);

  std::vector<Complex> amp(static_cast<std::size_t>(d) * rank, Complex(0.0, 0.0));
  double kept = 0.0;
  for (int i = 0; i < rank; ++i) {
    const double lambda = std::max(eigen.eigenvalues[i], 0.0);
    kept += lambda;
    const double root = std::sqrt(lambda);
    for (int a = 0; a < d; ++a)
      amp[static_cast<std::size_t>(a) * rank + i] = root * eigen.eigenvectors(a, i);
  }
  // renormalize away the dropped sub-cutoff mass
  const double scale = 1.0 / std::sqrt(kept);
  for (auto& v : amp) v *= scale;

  return PureState::validated(std::move(amp), BipartiteSplit{d, rank});
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

DensityMatrix random_density(int dim, int rank, Rng& rng) {
  if (rank < 1 || rank > dim) {
    throw ConfigError("random_density: rank " + std::to_string(rank) +
                      " out of range [1, " + std::to_string(dim) + "]");
  }
  std::vector<Complex> g(static_cast<std::size_t>(dim) * rank);
  for (auto& v : g) v = rng.complex_normal();

  ComplexMatrix m(dim);
  double trace = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j <= i; ++j) {
      Complex sum = 0.0;
      for (int k = 0; k < rank; ++k)
        sum += g[static_cast<std::size_t>(i) * rank + k] *
               std::conj(g[static_cast<std::size_t>(j) * rank + k]);
      m(i, j) = sum;
      m(j, i) = std::conj(sum);
    }
    trace += m(i, i).real();
  }
  m *= 1.0 / trace;
  return DensityMatrix::validated(m);
}

PureState random_pure(int dim, Rng& rng) {
  std::vector<Complex> amp(dim);
  double norm_sq = 0.0;
  for (auto& a : amp) {
    a = rng.complex_normal();
    norm_sq += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amp) a *= scale;
  return PureState::validated(std::move(amp));
}

PureState random_bipartite_pure(const BipartiteSplit& split, Rng& rng) {
  PureState flat = random_pure(split.total(), rng);
  return PureState::validated(flat.amplitudes(), split);
}

ComplexMatrix random_unitary(int dim, Rng& rng) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = rng.complex_normal();

  // modified Gram-Schmidt over columns, two passes
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (int i = 0; i < dim; ++i) proj += std::conj(m(i, k)) * m(i, j);
        for (int i = 0; i < dim; ++i) m(i, j) -= proj * m(i, k);
      }
      double norm_sq = 0.0;
      for (int i = 0; i < dim; ++i) norm_sq += std::norm(m(i, j));
      const double scale = 1.0 / std::sqrt(norm_sq);
      for (int i = 0; i < dim; ++i) m(i, j) *= scale;
    }
  }
  return m;
}

std::vector<double> random_probability_vector(int n, Rng& rng) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (auto& v : p) {
    v = -std::log(rng.uniform_open());
    sum += v;
  }
  for (auto& v : p) v /= sum;
  return p;
}

}  // namespace qlent
