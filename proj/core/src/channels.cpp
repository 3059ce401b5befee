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

#include "qlent/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qlent {

ProjectiveMeasurement ProjectiveMeasurement::validated(
    std::vector<ComplexMatrix> projectors) {
  if (projectors.empty()) {
    throw MeasurementError("measurement: empty projector set");
  }
  const int d = projectors.front().dim();
  ComplexMatrix sum(d);
  for (const auto& p : projectors) {
    p.require_dim(d, "measurement projector");
    sum += p;
  }
  sum -= ComplexMatrix::identity(d);
  const double completeness_dev = sum.max_abs();
  if (completeness_dev > tol::kHermiticity) {
    throw MeasurementError("measurement: projectors do not sum to identity "
                           "(max deviation " + std::to_string(completeness_dev) + ")");
  }
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    for (std::size_t j = 0; j < projectors.size(); ++j) {
      ComplexMatrix prod = projectors[i] * projectors[j];
      if (i == j) prod -= projectors[j];
      const double dev = prod.max_abs();
      if (dev > tol::kHermiticity) {
        throw MeasurementError("measurement: projectors " + std::to_string(i) +
                               " and " + std::to_string(j) +
                               " violate orthogonality/idempotence (max deviation " +
                               std::to_string(dev) + ")");
      }
    }
  }
  return ProjectiveMeasurement(std::move(projectors));
}

ProjectiveMeasurement ProjectiveMeasurement::computational_basis(int dim) {
  std::vector<ComplexMatrix> projectors;
  projectors.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    ComplexMatrix p(dim);
    p(i, i) = 1.0;
    projectors.push_back(std::move(p));
  }
  return validated(std::move(projectors));
}

DensityMatrix measure(const DensityMatrix& rho, const ProjectiveMeasurement& m) {
  rho.matrix().require_dim(m.dim(), "measure");
  ComplexMatrix acc(rho.dim());
  for (const auto& p : m.projectors()) {
    acc += p * rho.matrix() * p;
  }
  return DensityMatrix::validated(acc);
}

std::vector<int> random_composition(int n, Rng& rng, int min_parts) {
  if (min_parts > n) {
    throw ConfigError("random_composition: cannot split " + std::to_string(n) +
                      " into " + std::to_string(min_parts) + " parts");
  }
  std::vector<int> parts;
  int remaining = n;
  while (remaining > 0) {
    const int still_needed = min_parts - static_cast<int>(parts.size()) - 1;
    const int cap = still_needed > 0 ? remaining - still_needed : remaining;
    const int part = rng.uniform_int(1, cap);
    parts.push_back(part);
    remaining -= part;
  }
  return parts;
}

ProjectiveMeasurement random_projective_measurement(int dim, Rng& rng,
                                                    int min_parts) {
  const ComplexMatrix basis = random_unitary(dim, rng);
  const std::vector<int> parts = random_composition(dim, rng, min_parts);

  std::vector<ComplexMatrix> projectors;
  projectors.reserve(parts.size());
  int col = 0;
  for (int part : parts) {
    ComplexMatrix p(dim);
    for (int c = col; c < col + part; ++c)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          p(i, j) += basis(i, c) * std::conj(basis(j, c));
    projectors.push_back(std::move(p));
    col += part;
  }
  return ProjectiveMeasurement::validated(std::move(projectors));
}

FlaggedMixture mix_with_flags(const MixtureEnsemble& ensemble) {
  const int d = ensemble.dim();
  const int k = ensemble.size();
  ComplexMatrix out(d * k);
  for (int i = 0; i < k; ++i) {
    const double p = ensemble.weights()[i];
    const ComplexMatrix& rho = ensemble.components()[i].matrix();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        out(a * k + i, b * k + i) = p * rho(a, b);
  }
  return FlaggedMixture{DensityMatrix::validated(out), BipartiteSplit{d, k}};
}

ComplexMatrix weyl_operator(int b, int a, int c) {
  ComplexMatrix w(b);
  const double step = 2.0 * std::numbers::pi * c / b;
  for (int k = 0; k < b; ++k) {
    // (X^a Z^c)|k> = omega^{kc} |k+a mod b>
    w((k + a) % b, k) = Complex(std::cos(step * k), std::sin(step * k));
  }
  return w;
}

UnitaryMixture weyl_mixture(int b) {
  if (b < 2) {
    throw ConfigError("weyl_mixture: dimension must be at least 2, got " +
                      std::to_string(b));
  }
  UnitaryMixture out;
  out.weights.assign(static_cast<std::size_t>(b) * b, 1.0 / (static_cast<double>(b) * b));
  out.unitaries.reserve(static_cast<std::size_t>(b) * b);
  for (int a = 0; a < b; ++a)
    for (int c = 0; c < b; ++c) out.unitaries.push_back(weyl_operator(b, a, c));
  return out;
}

DensityMatrix twirl_subsystem_b(const DensityMatrix& rho_ab,
                                const BipartiteSplit& split) {
  split.require_matches(rho_ab.dim(), "twirl_subsystem_b");
  const UnitaryMixture mixture = weyl_mixture(split.dim_b);
  const ComplexMatrix eye_a = ComplexMatrix::identity(split.dim_a);

  ComplexMatrix acc(rho_ab.dim());
  for (std::size_t j = 0; j < mixture.unitaries.size(); ++j) {
    const ComplexMatrix u = tensor_product(eye_a, mixture.unitaries[j]);
    acc += mixture.weights[j] * (u * rho_ab.matrix() * u.adjoint());
  }
  return DensityMatrix::validated(acc);
}

}  // namespace qlent
