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

#ifndef QLENT_TESTS_TEST_SUPPORT_HPP
#define QLENT_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "qlent/complex_matrix.hpp"
#include "qlent/partition.hpp"
#include "qlent/rng.hpp"

namespace qlent::test {

inline ComplexMatrix random_hermitian(int dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return 0.5 * (g + g.adjoint());
}

inline ComplexMatrix random_complex(int dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return g;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double dev = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      dev = std::max(dev, std::abs(a(i, j) - b(i, j)));
  return dev;
}

// Independent dit oracle: literally enumerate ordered pairs in different
// blocks, the counting definition of the classical logical entropy.
inline long long enumerate_dits(const ClassicalPartition& pi) {
  const int n = pi.universe_size();
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < pi.blocks().size(); ++b)
    for (int u : pi.blocks()[b]) block_of[u] = static_cast<int>(b);
  long long dits = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (block_of[u] != block_of[v]) ++dits;
  return dits;
}

// Visits every set partition of {0..n-1} via restricted growth strings.
inline void for_each_partition(
    int n, const std::function<void(const ClassicalPartition&)>& visit) {
  std::vector<int> rgs(n, 0);
  while (true) {
    int block_count = 0;
    for (int v : rgs) block_count = std::max(block_count, v + 1);
    std::vector<std::vector<int>> blocks(block_count);
    for (int u = 0; u < n; ++u) blocks[rgs[u]].push_back(u);
    visit(ClassicalPartition::validated(n, std::move(blocks)));

    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
      if (rgs[i] <= cap) break;
    }
    if (i == 0) return;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
}

}  // namespace qlent::test

#endif  // QLENT_TESTS_TEST_SUPPORT_HPP
