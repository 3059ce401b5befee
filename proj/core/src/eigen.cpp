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

#include "qlent/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qlent {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p,q). The rotation is the unitary
// that is identity outside rows/columns p,q with block
//   [ c          -e^{i phi} s ]
//   [ e^{-i phi} s          c ],
// where e^{i phi} carries the phase of a(p,q) and t = s/c solves
// t^2 - 2 tau t - 1 = 0 with tau = (a_qq - a_pp) / (2 |a_pq|).
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex beta = a(p, q);
  const double abs_beta = std::abs(beta);
  if (abs_beta == 0.0) return;

  const Complex phase = beta / abs_beta;
  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();
  const double tau = (gamma - alpha) / (2.0 * abs_beta);

  // smaller-magnitude root, for numerical stability
  double t;
  if (tau >= 0.0) {
    t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
  } else {
    t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.dim();
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp + std::conj(phase) * s * akq;
    a(k, q) = -phase * s * akp + c * akq;
    a(p, k) = std::conj(a(k, p));
    a(q, k) = std::conj(a(k, q));
  }
  a(p, p) = alpha * c * c + 2.0 * abs_beta * s * c + gamma * s * s;
  a(q, q) = alpha * s * s - 2.0 * abs_beta * s * c + gamma * c * c;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (int k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp + std::conj(phase) * s * vkq;
    v(k, q) = -phase * s * vkp + c * vkq;
  }
}

}  // namespace

ComplexMatrix Eigendecomposition::reconstruct() const {
  const int n = eigenvectors.dim();
  ComplexMatrix out(n);
  for (int k = 0; k < n; ++k) {
    const double lambda = eigenvalues[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        out(i, j) += lambda * eigenvectors(i, k) * std::conj(eigenvectors(j, k));
  }
  return out;
}

std::vector<Complex> Eigendecomposition::eigenvector(int i) const {
  std::vector<Complex> out(eigenvectors.dim());
  for (int k = 0; k < eigenvectors.dim(); ++k) out[k] = eigenvectors(k, i);
  return out;
}

Eigendecomposition hermitian_eigen(const ComplexMatrix& m) {
  const double dev = m.hermiticity_deviation();
  if (dev > tol::kHermiticity) {
    throw HermiticityError("hermitian_eigen: input is not Hermitian (max deviation " +
                               std::to_string(dev) + ")",
                           dev);
  }

  const int n = m.dim();
  ComplexMatrix a = m.symmetrized();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1.0, a.frobenius_norm());
  const double threshold = tol::kJacobiOffDiagonal * scale;
  // entries this small cannot push the off-diagonal norm above threshold
  const double skip = threshold / (static_cast<double>(n) * n);

  bool converged = (n == 1) || off_diagonal_norm(a) < threshold;
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > skip) rotate(a, v, p, q);
    converged = off_diagonal_norm(a) < threshold;
  }
  if (!converged) {
    throw ConvergenceError("hermitian_eigen: no convergence after " +
                           std::to_string(tol::kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a(i, i).real() > a(j, j).real();
  });

  Eigendecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace qlent
