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

#include <doctest.h>

#include "qlent/channels.hpp"
#include "qlent/entropy.hpp"
#include "test_support.hpp"

using namespace qlent;
using qlent::test::max_abs_diff;
using qlent::test::random_complex;

TEST_SUITE_BEGIN("channels");

TEST_CASE("measurement validation") {
  CHECK_NOTHROW(ProjectiveMeasurement::computational_basis(3));

  // incomplete set
  ComplexMatrix p0(2);
  p0(0, 0) = 1.0;
  CHECK_THROWS_AS(ProjectiveMeasurement::validated({p0}), MeasurementError);

  // complete but not idempotent
  const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
  CHECK_THROWS_AS(ProjectiveMeasurement::validated({half, half}), MeasurementError);

  // non-orthogonal projectors
  const ComplexMatrix plus = ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}});
  CHECK_THROWS_AS(ProjectiveMeasurement::validated({plus, p0}), MeasurementError);

  CHECK_THROWS_AS(ProjectiveMeasurement::validated({}), MeasurementError);
}

TEST_CASE("measuring a diagonal state in its own basis changes nothing") {
  const DensityMatrix rho = DensityMatrix::validated(
      ComplexMatrix::diagonal(std::vector<double>{0.6, 0.3, 0.1}));
  const DensityMatrix measured =
      measure(rho, ProjectiveMeasurement::computational_basis(3));
  CHECK(max_abs_diff(measured.matrix(), rho.matrix()) < 1e-15);
}

TEST_CASE("measuring |+> in the computational basis mixes it fully") {
  // P0 rho P0 + P1 rho P1 = diag(1/2, 1/2) by hand
  const DensityMatrix plus = DensityMatrix::validated(
      ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}));
  const DensityMatrix measured =
      measure(plus, ProjectiveMeasurement::computational_basis(2));
  CHECK(max_abs_diff(measured.matrix(), 0.5 * ComplexMatrix::identity(2)) < 1e-15);
  CHECK(logical_entropy(plus) < 1e-12);
  CHECK(logical_entropy(measured) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("measurement preserves trace and never decreases entropy") {
  Rng rng(400);
  for (int trial = 0; trial < 150; ++trial) {
    const int d = rng.uniform_int(2, 8);
    const DensityMatrix rho = random_density(d, rng.uniform_int(1, d), rng);
    const ProjectiveMeasurement m = random_projective_measurement(d, rng);
    const DensityMatrix measured = measure(rho, m);

    CHECK(std::abs(measured.matrix().trace().real() - 1.0) < 1e-12);
    CHECK(logical_entropy(measured) >= logical_entropy(rho) - 1e-10);
  }
}

TEST_CASE("measurement channels are idempotent") {
  Rng rng(401);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = rng.uniform_int(2, 6);
    const DensityMatrix rho = random_density(d, rng.uniform_int(1, d), rng);
    const ProjectiveMeasurement m = random_projective_measurement(d, rng);
    const DensityMatrix once = measure(rho, m);
    const DensityMatrix twice = measure(once, m);
    CHECK(max_abs_diff(once.matrix(), twice.matrix()) < 1e-12);
  }
}

TEST_CASE("measurement dimension mismatch") {
  const DensityMatrix rho = random_density(3, 3, 1ull);
  CHECK_THROWS_AS(measure(rho, ProjectiveMeasurement::computational_basis(2)),
                  DimensionError);
}

TEST_CASE("random measurements produce coarse projectors") {
  Rng rng(402);
  bool saw_coarse = false;
  for (int trial = 0; trial < 40; ++trial) {
    if (random_projective_measurement(6, rng).size() < 6) saw_coarse = true;
  }
  CHECK(saw_coarse);

  // at dim 2 both the trivial and the rank-1 composition show up quickly
  bool saw_single = false;
  bool saw_rank1 = false;
  for (int trial = 0; trial < 60; ++trial) {
    const ProjectiveMeasurement m = random_projective_measurement(2, rng);
    if (m.size() == 1) saw_single = true;
    if (m.size() == 2) saw_rank1 = true;
  }
  CHECK(saw_single);
  CHECK(saw_rank1);

  // composition respects the minimum part count
  for (int trial = 0; trial < 20; ++trial) {
    const auto parts = random_composition(5, rng, 2);
    CHECK(parts.size() >= 2);
    int total = 0;
    for (int p : parts) {
      CHECK(p >= 1);
      total += p;
    }
    CHECK(total == 5);
  }
  CHECK_THROWS_AS(random_composition(2, rng, 3), ConfigError);
}

TEST_CASE("mix_with_flags block structure and marginals") {
  Rng rng(403);

  // single component: rho x |0><0|
  const DensityMatrix rho = random_density(3, 2, rng);
  const FlaggedMixture single =
      mix_with_flags(MixtureEnsemble::validated({1.0}, {rho}));
  CHECK(single.split == BipartiteSplit{3, 1});
  CHECK(max_abs_diff(single.state.matrix(), rho.matrix()) < 1e-12);

  for (int trial = 0; trial < 20; ++trial) {
    const int d = rng.uniform_int(2, 4);
    const int k = rng.uniform_int(2, 4);
    const auto weights = random_probability_vector(k, rng);
    std::vector<DensityMatrix> comps;
    ComplexMatrix want_mix(d);
    for (int i = 0; i < k; ++i) {
      comps.push_back(random_density(d, rng.uniform_int(1, d), rng));
      want_mix += weights[i] * comps.back().matrix();
    }
    const auto ensemble = MixtureEnsemble::validated(weights, comps);
    const FlaggedMixture flagged = mix_with_flags(ensemble);

    CHECK(max_abs_diff(trace_out_b(flagged.state.matrix(), flagged.split), want_mix) <
          1e-12);
    CHECK(max_abs_diff(trace_out_a(flagged.state.matrix(), flagged.split),
                       ComplexMatrix::diagonal(weights)) < 1e-12);

    // entropy sandwich evaluated on the instance
    const double l_joint = logical_entropy(flagged.state);
    const double l_mix = logical_entropy(ensemble.mixture());
    const double l_flags = distribution_logical_entropy(weights);
    CHECK(l_mix <= l_joint + 1e-10);
    CHECK(l_joint <= l_mix + l_flags + 1e-10);
  }
}

TEST_CASE("weyl mixture for a qubit is the Pauli family") {
  const UnitaryMixture mix = weyl_mixture(2);
  REQUIRE(mix.unitaries.size() == 4);
  for (double w : mix.weights) CHECK(w == doctest::Approx(0.25));

  const auto eye = ComplexMatrix::identity(2);
  const auto x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  const auto z = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  CHECK(max_abs_diff(mix.unitaries[0], eye) < 1e-15);      // a=0 c=0
  CHECK(max_abs_diff(mix.unitaries[1], z) < 1e-12);        // a=0 c=1
  CHECK(max_abs_diff(mix.unitaries[2], x) < 1e-15);        // a=1 c=0
  CHECK(max_abs_diff(mix.unitaries[3], x * z) < 1e-12);    // a=1 c=1

  CHECK_THROWS_AS(weyl_mixture(1), ConfigError);
}

TEST_CASE("weyl operators are unitary") {
  for (int b : {2, 3, 5}) {
    const UnitaryMixture mix = weyl_mixture(b);
    for (const auto& u : mix.unitaries) {
      CHECK(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(b)) < 1e-10);
    }
  }
}

TEST_CASE("weyl twirl scrambles any matrix to tr(M) I / b") {
  // direct summation over all b^2 terms
  Rng rng(404);
  for (int b : {2, 3, 5}) {
    const UnitaryMixture mix = weyl_mixture(b);
    const ComplexMatrix m = random_complex(b, rng);

    ComplexMatrix averaged(b);
    for (std::size_t j = 0; j < mix.unitaries.size(); ++j) {
      averaged += mix.weights[j] * (mix.unitaries[j] * m * mix.unitaries[j].adjoint());
    }
    const ComplexMatrix want = (m.trace() / static_cast<double>(b)) *
                               ComplexMatrix::identity(b);
    CHECK(max_abs_diff(averaged, want) < 1e-10);
  }

  // |0><0| at b=2 averages to I/2
  ComplexMatrix zero(2);
  zero(0, 0) = 1.0;
  const UnitaryMixture pauli = weyl_mixture(2);
  ComplexMatrix averaged(2);
  for (std::size_t j = 0; j < pauli.unitaries.size(); ++j)
    averaged += pauli.weights[j] *
                (pauli.unitaries[j] * zero * pauli.unitaries[j].adjoint());
  CHECK(max_abs_diff(averaged, 0.5 * ComplexMatrix::identity(2)) < 1e-15);
}

TEST_CASE("subsystem twirl equals partial trace tensored with I/b") {
  Rng rng(405);

  // product input: rho_A x sigma_B -> rho_A x I/b
  const DensityMatrix rho_a = random_density(2, 2, rng);
  const DensityMatrix sigma_b = random_density(3, 2, rng);
  const DensityMatrix product = DensityMatrix::validated(
      tensor_product(rho_a.matrix(), sigma_b.matrix()));
  const DensityMatrix twirled = twirl_subsystem_b(product, BipartiteSplit{2, 3});
  const ComplexMatrix want =
      tensor_product(rho_a.matrix(), (1.0 / 3.0) * ComplexMatrix::identity(3));
  CHECK(max_abs_diff(twirled.matrix(), want) < 1e-10);

  // Bell state -> I/4
  const double h = 0.5;
  const DensityMatrix bell = DensityMatrix::validated(
      ComplexMatrix::from_rows({{h, 0.0, 0.0, h},
                                {0.0, 0.0, 0.0, 0.0},
                                {0.0, 0.0, 0.0, 0.0},
                                {h, 0.0, 0.0, h}}));
  const DensityMatrix bell_twirled = twirl_subsystem_b(bell, BipartiteSplit{2, 2});
  CHECK(max_abs_diff(bell_twirled.matrix(), 0.25 * ComplexMatrix::identity(4)) <
        1e-12);

  // identity on random bipartite states
  for (const auto& [da, db] : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {3, 2}, {4, 2}}) {
    const BipartiteSplit split{da, db};
    const DensityMatrix state =
        random_density(split.total(), rng.uniform_int(1, split.total()), rng);
    const DensityMatrix got = twirl_subsystem_b(state, split);
    const ComplexMatrix direct =
        tensor_product(trace_out_b(state.matrix(), split),
                       (1.0 / db) * ComplexMatrix::identity(db));
    CHECK(std::sqrt(frobenius_distance_sq(got.matrix(), direct.symmetrized())) <
          1e-10);
    CHECK(std::abs(got.matrix().trace().real() - 1.0) < 1e-12);
  }

  CHECK_THROWS_AS(twirl_subsystem_b(product, BipartiteSplit{2, 2}), DimensionError);
}

TEST_CASE("twirling cannot increase logical divergence") {
  Rng rng(406);
  for (int trial = 0; trial < 30; ++trial) {
    const BipartiteSplit split{2, rng.uniform_int(2, 3)};
    const int n = split.total();
    const DensityMatrix rho = random_density(n, rng.uniform_int(1, n), rng);
    const DensityMatrix sigma = random_density(n, rng.uniform_int(1, n), rng);
    const double before = logical_divergence(rho, sigma);
    const double after = logical_divergence(twirl_subsystem_b(rho, split),
                                            twirl_subsystem_b(sigma, split));
    CHECK(after <= before + 1e-10);
  }
}

TEST_SUITE_END();
