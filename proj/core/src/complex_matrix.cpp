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

#include "qlent/complex_matrix.hpp"

#include <cmath>
#include <string>

namespace qlent {

namespace {

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                    const char* context) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(context) + ": dimensions differ (" +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
  }
}

void check_hermitian(const ComplexMatrix& m, const char* context) {
  double dev = m.hermiticity_deviation();
  if (dev > tol::kHermiticity) {
    throw HermiticityError(std::string(context) +
                               ": input is not Hermitian (max deviation " +
                               std::to_string(dev) + ")",
                           dev);
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim < 1) {
    throw DimensionError("matrix dimension must be positive, got " +
                         std::to_string(dim));
  }
  data_.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& entries) {
  ComplexMatrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& entries) {
  ComplexMatrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(static_cast<int>(rows.size()));
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m.dim()) {
      throw DimensionError("from_rows: row " + std::to_string(i) + " has " +
                           std::to_string(row.size()) + " entries, expected " +
                           std::to_string(m.dim()));
    }
    int j = 0;
    for (const auto& entry : row) m(i, j++) = entry;
    ++i;
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  check_same_dim(*this, other, "operator+=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  check_same_dim(*this, other, "operator-=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& v : data_) sum += std::norm(v);
  return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::hermiticity_deviation() const {
  double dev = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return dev;
}

ComplexMatrix ComplexMatrix::symmetrized() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    out(i, i) = (*this)(i, i).real();
    for (int j = i + 1; j < dim_; ++j) {
      Complex v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

void ComplexMatrix::require_dim(int expected, const char* context) const {
  if (dim_ != expected) {
    throw DimensionError(std::string(context) + ": expected dimension " +
                         std::to_string(expected) + ", got " +
                         std::to_string(dim_));
  }
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b, "operator*");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
  m *= scalar;
  return m;
}

ComplexMatrix operator*(double scalar, ComplexMatrix m) {
  m *= scalar;
  return m;
}

void BipartiteSplit::require_matches(int dim, const char* context) const {
  if (dim_a < 1 || dim_b < 1) {
    throw DimensionError(std::string(context) + ": split factors must be positive, got " +
                         std::to_string(dim_a) + "x" + std::to_string(dim_b));
  }
  if (dim_a * dim_b != dim) {
    throw DimensionError(std::string(context) + ": split " + std::to_string(dim_a) +
                         "x" + std::to_string(dim_b) + " does not factor dimension " +
                         std::to_string(dim));
  }
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             int max_dim) {
  const long long out_dim =
      static_cast<long long>(a.dim()) * static_cast<long long>(b.dim());
  if (out_dim > max_dim) {
    throw DimensionError("tensor_product: output dimension " +
                         std::to_string(out_dim) + " exceeds the cap " +
                         std::to_string(max_dim));
  }
  const int da = a.dim();
  const int db = b.dim();
  ComplexMatrix out(static_cast<int>(out_dim));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l)
          out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix trace_out_b(const ComplexMatrix& m, const BipartiteSplit& split) {
  split.require_matches(m.dim(), "trace_out_b");
  const int da = split.dim_a;
  const int db = split.dim_b;
  ComplexMatrix out(da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      Complex sum = 0.0;
      for (int k = 0; k < db; ++k) sum += m(i * db + k, j * db + k);
      out(i, j) = sum;
    }
  return out;
}

ComplexMatrix trace_out_a(const ComplexMatrix& m, const BipartiteSplit& split) {
  split.require_matches(m.dim(), "trace_out_a");
  const int da = split.dim_a;
  const int db = split.dim_b;
  ComplexMatrix out(db);
  for (int k = 0; k < db; ++k)
    for (int l = 0; l < db; ++l) {
      Complex sum = 0.0;
      for (int i = 0; i < da; ++i) sum += m(i * db + k, i * db + l);
      out(k, l) = sum;
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const BipartiteSplit& split,
                            Subsystem traced_out) {
  return traced_out == Subsystem::B ? trace_out_b(m, split)
                                    : trace_out_a(m, split);
}

double trace_of_square(const ComplexMatrix& m) {
  check_hermitian(m, "trace_of_square");
  double sum = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) sum += std::norm(m(i, j));
  return sum;
}

double frobenius_distance_sq(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b, "frobenius_distance_sq");
  check_hermitian(a, "frobenius_distance_sq");
  check_hermitian(b, "frobenius_distance_sq");
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) sum += std::norm(a(i, j) - b(i, j));
  return sum;
}

double hermitian_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_dim(a, b, "hermitian_inner");
  check_hermitian(a, "hermitian_inner");
  check_hermitian(b, "hermitian_inner");
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const Complex v = a(i, j) * std::conj(b(i, j));
      sum += v.real();
    }
  return sum;
}

}  // namespace qlent
