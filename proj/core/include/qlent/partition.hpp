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

#ifndef QLENT_PARTITION_HPP
#define QLENT_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "qlent/errors.hpp"

namespace qlent {

// Exact fraction on int64, gcd-normalized with positive denominator.
// The classical partition formulas are combinatorial identities; keeping
// them in rational arithmetic makes two-path tests true identity checks.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  friend bool operator==(const Rational&, const Rational&) = default;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Set partition of {0, ..., n-1} into disjoint non-empty blocks covering
// the universe. Block probabilities p_B = |B|/|U| are exact rationals.
class ClassicalPartition {
 public:
  static ClassicalPartition validated(int universe_size,
                                      std::vector<std::vector<int>> blocks);
  // all singletons / one block
  static ClassicalPartition discrete(int universe_size);
  static ClassicalPartition indiscrete(int universe_size);

  int universe_size() const { return universe_size_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  // Number of ordered pairs (u, u') lying in different blocks:
  // |U|^2 - sum_B |B|^2.
  std::int64_t dit_count() const;

  // dit_count / |U|^2 as an exact rational.
  Rational logical_entropy_exact() const;
  // 1 - sum_B p_B^2, evaluated term by term in rationals. Mathematically
  // identical to logical_entropy_exact; kept as the second path of the
  // identity check.
  Rational sum_formula_exact() const;

  double logical_entropy() const { return logical_entropy_exact().to_double(); }

 private:
  ClassicalPartition(int universe_size, std::vector<std::vector<int>> blocks)
      : universe_size_(universe_size), blocks_(std::move(blocks)) {}

  int universe_size_;
  std::vector<std::vector<int>> blocks_;
};

// Non-negative reals summing to 1 within tolerance.
class ProbabilityVector {
 public:
  static ProbabilityVector validated(std::vector<double> entries);
  // Clamps round-off negatives (>= -1e-10) to zero before validating;
  // intended for eigenvalue spectra.
  static ProbabilityVector from_spectrum(std::vector<double> spectrum);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<double>& entries() const { return entries_; }

 private:
  explicit ProbabilityVector(std::vector<double> entries)
      : entries_(std::move(entries)) {}
  std::vector<double> entries_;
};

}  // namespace qlent

#endif  // QLENT_PARTITION_HPP
