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

#ifndef QLENT_COMPLEX_MATRIX_HPP
#define QLENT_COMPLEX_MATRIX_HPP

#include <complex>
#include <initializer_list>
#include <vector>

#include "qlent/errors.hpp"
#include "qlent/tolerances.hpp"

namespace qlent {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major storage.
//
// This is the raw linear-algebra carrier: it makes no claims about
// Hermiticity, trace or positivity. Validated state types live on top.
class ComplexMatrix {
 public:
  // Zero matrix of the given dimension.
  explicit ComplexMatrix(int dim);

  static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(const std::vector<double>& entries);
  static ComplexMatrix diagonal(const std::vector<Complex>& entries);
  // Row-by-row construction; every row must have the same length.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return data_[index(i, j)]; }
  const Complex& operator()(int i, int j) const { return data_[index(i, j)]; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);
  ComplexMatrix& operator*=(double scalar);

  ComplexMatrix adjoint() const;
  Complex trace() const;

  double frobenius_norm() const;
  double max_abs() const;

  // Largest entrywise deviation |m - m^dagger|.
  double hermiticity_deviation() const;
  // (m + m^dagger) / 2; real diagonal by construction.
  ComplexMatrix symmetrized() const;

  bool all_finite() const;
  // Throws DimensionError unless `dim == expected`.
  void require_dim(int expected, const char* context) const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * dim_ + j;
  }

  int dim_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(double scalar, ComplexMatrix m);

// Which factor of a bipartite system an operation refers to.
enum class Subsystem { A, B };

// Dimensions of a bipartite factorization. Subsystem A is the slow
// (leftmost) tensor index everywhere in this library.
struct BipartiteSplit {
  int dim_a;
  int dim_b;

  int total() const { return dim_a * dim_b; }
  // Throws DimensionError unless dim_a * dim_b == dim (and both positive).
  void require_matches(int dim, const char* context) const;

  friend bool operator==(const BipartiteSplit&, const BipartiteSplit&) = default;
};

// Kronecker product; subsystem A (the first argument) is the slow index:
// result[(i*b.dim + k), (j*b.dim + l)] = a(i,j) * b(k,l).
// Throws DimensionError when the output dimension would exceed `max_dim`.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             int max_dim = tol::kMaxDim);

// Traces out the requested subsystem of a bipartite matrix. Tracing out B
// of an (a*b)-dimensional matrix yields the a-dimensional matrix with
// [i,j] = sum_k m[(i,k),(j,k)]; symmetrically for A. Preserves the trace.
ComplexMatrix partial_trace(const ComplexMatrix& m, const BipartiteSplit& split,
                            Subsystem traced_out);
ComplexMatrix trace_out_a(const ComplexMatrix& m, const BipartiteSplit& split);
ComplexMatrix trace_out_b(const ComplexMatrix& m, const BipartiteSplit& split);

// tr(m^2) for Hermitian m, computed as the entrywise sum of |m_ij|^2
// without forming m^2. Throws HermiticityError beyond tolerance.
double trace_of_square(const ComplexMatrix& m);

// tr((a-b)^2) for Hermitian a, b: the entrywise sum of |a_ij - b_ij|^2.
double frobenius_distance_sq(const ComplexMatrix& a, const ComplexMatrix& b);

// Re tr(a*b) for Hermitian a, b (the Hilbert-Schmidt inner product).
double hermitian_inner(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qlent

#endif  // QLENT_COMPLEX_MATRIX_HPP
