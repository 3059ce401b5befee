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

#include "qlent/partition.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qlent/tolerances.hpp"

namespace qlent {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw ConfigError("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

ClassicalPartition ClassicalPartition::validated(
    int universe_size, std::vector<std::vector<int>> blocks) {
  if (universe_size < 1) {
    throw ConfigError("partition: universe must be non-empty");
  }
  std::vector<bool> seen(universe_size, false);
  int covered = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw ConfigError("partition: empty block");
    for (int u : block) {
      if (u < 0 || u >= universe_size) {
        throw ConfigError("partition: element " + std::to_string(u) +
                          " outside universe of size " + std::to_string(universe_size));
      }
      if (seen[u]) {
        throw ConfigError("partition: element " + std::to_string(u) +
                          " appears in two blocks");
      }
      seen[u] = true;
      ++covered;
    }
  }
  if (covered != universe_size) {
    throw ConfigError("partition: blocks cover " + std::to_string(covered) +
                      " of " + std::to_string(universe_size) + " elements");
  }
  return ClassicalPartition(universe_size, std::move(blocks));
}

ClassicalPartition ClassicalPartition::discrete(int universe_size) {
  std::vector<std::vector<int>> blocks(universe_size);
  for (int u = 0; u < universe_size; ++u) blocks[u] = {u};
  return validated(universe_size, std::move(blocks));
}

ClassicalPartition ClassicalPartition::indiscrete(int universe_size) {
  std::vector<int> all(universe_size);
  std::iota(all.begin(), all.end(), 0);
  return validated(universe_size, {std::move(all)});
}

std::int64_t ClassicalPartition::dit_count() const {
  const std::int64_t n = universe_size_;
  std::int64_t same = 0;
  for (const auto& block : blocks_) {
    const std::int64_t b = static_cast<std::int64_t>(block.size());
    same += b * b;
  }
  return n * n - same;
}

Rational ClassicalPartition::logical_entropy_exact() const {
  const std::int64_t n = universe_size_;
  return Rational(dit_count(), n * n);
}

Rational ClassicalPartition::sum_formula_exact() const {
  const std::int64_t n = universe_size_;
  Rational acc(1, 1);
  for (const auto& block : blocks_) {
    const Rational p(static_cast<std::int64_t>(block.size()), n);
    acc = acc - p * p;
  }
  return acc;
}

ProbabilityVector ProbabilityVector::validated(std::vector<double> entries) {
  if (entries.empty()) {
    throw ConfigError("probability vector: must be non-empty");
  }
  double sum = 0.0;
  for (double p : entries) {
    if (!(p >= 0.0) || p > 1.0 + 1e-12) {
      throw ValidationError(ValidationError::Kind::Weights,
                            "probability vector: entry " + std::to_string(p) +
                                " outside [0, 1]",
                            p < 0.0 ? -p : p - 1.0);
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::kValidation) {
    throw ValidationError(ValidationError::Kind::Weights,
                          "probability vector: sum deviates from 1 by " +
                              std::to_string(std::abs(sum - 1.0)),
                          std::abs(sum - 1.0));
  }
  return ProbabilityVector(std::move(entries));
}

ProbabilityVector ProbabilityVector::from_spectrum(std::vector<double> spectrum) {
  for (double& v : spectrum) {
    if (v < 0.0 && v >= -tol::kEntropyNegativity) v = 0.0;
  }
  return validated(std::move(spectrum));
}

}  // namespace qlent
