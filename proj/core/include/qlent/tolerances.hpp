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

#ifndef QLENT_TOLERANCES_HPP
#define QLENT_TOLERANCES_HPP

namespace qlent::tol {

// Entrywise Hermiticity tolerance; inputs within it are symmetrized.
inline constexpr double kHermiticity = 1e-10;

// Density-matrix validation: |tr - 1| and -min(eigenvalue) bounds.
inline constexpr double kValidation = 1e-10;

// Eigenvalues below this are treated as numerical rank deficiency.
inline constexpr double kRankCutoff = 1e-12;

// Jacobi eigensolver: off-diagonal Frobenius-norm stopping threshold
// (relative to the matrix scale) and the sweep cap.
inline constexpr double kJacobiOffDiagonal = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Negative entropy values above this magnitude signal a real bug rather
// than round-off; smaller negatives clamp to zero.
inline constexpr double kEntropyNegativity = 1e-10;

// Default slack tolerance for randomized theorem checks.
inline constexpr double kCheckDefault = 1e-9;

// Hard cap on tensor-product output dimension.
inline constexpr int kMaxDim = 4096;

}  // namespace qlent::tol

#endif  // QLENT_TOLERANCES_HPP
