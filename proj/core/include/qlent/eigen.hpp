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

#ifndef QLENT_EIGEN_HPP
#define QLENT_EIGEN_HPP

#include <vector>

#include "qlent/complex_matrix.hpp"

namespace qlent {

// Spectral decomposition of a Hermitian matrix: m = V diag(lambda) V^dagger.
struct Eigendecomposition {
  std::vector<double> eigenvalues;  // sorted descending
  ComplexMatrix eigenvectors;       // columns aligned with eigenvalues

  // sum_i lambda_i v_i v_i^dagger
  ComplexMatrix reconstruct() const;
  // Column i as a plain vector.
  std::vector<Complex> eigenvector(int i) const;
};

// Cyclic Jacobi sweeps for complex Hermitian matrices. Inputs within the
// Hermiticity tolerance are symmetrized first. Eigenvectors of degenerate
// eigenvalues are basis-arbitrary; only span and reconstruction are
// contractual. Throws HermiticityError / ConvergenceError.
Eigendecomposition hermitian_eigen(const ComplexMatrix& m);

}  // namespace qlent

#endif  // QLENT_EIGEN_HPP
