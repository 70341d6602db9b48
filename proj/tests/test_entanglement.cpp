// Copyright 2026 The twoqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "twoqubit/bloch.hpp"
#include "twoqubit/entanglement.hpp"
#include "twoqubit/errors.hpp"
#include "twoqubit/oracle.hpp"
#include "twoqubit/sampling.hpp"

using namespace twoqubit;
using twoqubit::testing::concurrence_oracle;

namespace {

DensityMatrix pure(const std::array<Complex, 4>& amp) {
  return DensityMatrix::from_pure(PureState::normalized(amp));
}

}  // namespace

TEST_CASE("spin_flip examples") {
  CHECK(spin_flip(DensityMatrix::maximally_mixed()).approx_equal(Matrix4::identity() * 0.25, 1e-15));
  const DensityMatrix bell = DensityMatrix::from_pure(bell_phi_plus());
  CHECK(spin_flip(bell).approx_equal(bell.matrix(), 1e-15));
  CHECK(spin_flip(pure({1.0, 0.0, 0.0, 0.0}))
            .approx_equal(Matrix4::diagonal({0.0, 0.0, 0.0, 1.0}), 1e-15));
}

TEST_CASE("concurrence examples") {
  CHECK(concurrence(DensityMatrix::from_pure(bell_phi_plus())) == doctest::Approx(1.0).epsilon(1e-14));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(concurrence(pure({s, 0.0, s, 0.0})) <= 1e-15);
  CHECK(concurrence(DensityMatrix::maximally_mixed()) == 0.0);
}

TEST_CASE("pure-state concurrence is 2|ad − bc|") {
  Rng rng(61);
  double worst = 0.0;
  for (int i = 0; i < 5000; ++i) {
    const PureState psi = random_pure_state(rng);
    const double c = concurrence(DensityMatrix::from_pure(psi));
    worst = std::max(worst, std::abs(c - 2.0 * std::abs(psi.determinant())));
  }
  // Weakly entangled states: a product state plus a small admixture.
  for (int i = 0; i < 1000; ++i) {
    auto amp = kron(random_qubit(rng), random_qubit(rng));
    const double eps = std::pow(10.0, -rng.uniform(1.0, 8.0));
    for (auto& x : amp) x += eps * rng.complex_normal();
    const PureState psi = PureState::normalized(amp);
    const double c = concurrence(DensityMatrix::from_pure(psi));
    worst = std::max(worst, std::abs(c - 2.0 * std::abs(psi.determinant())));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("concurrence matches an independent Hermitian oracle") {
  Rng rng(62);
  for (int i = 0; i < 3000; ++i) {
    const Matrix4 m = i % 2 ? random_ginibre_state(rng) : random_local_werner(rng);
    CHECK(std::abs(concurrence(DensityMatrix::from_matrix(m)) - concurrence_oracle(m)) <= 1e-9);
  }
}

TEST_CASE("concurrence of locally rotated Werner states near purity") {
  // ρρ̃ has a triple eigenvalue of order (1 − p)² next to one of order 1.
  Rng rng(64);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double p = 1.0 - std::pow(10.0, -rng.uniform(0.5, 9.0));
    const Matrix4 u = kron(random_su2(rng), random_su2(rng));
    const Matrix4 m = u * werner_state(p).matrix() * u.adjoint();
    const double c = concurrence(DensityMatrix::from_matrix(m));
    worst = std::max(worst, std::abs(c - (3.0 * p - 1.0) / 2.0));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("spin-flip spectrum is real and nonnegative") {
  Rng rng(63);
  for (int i = 0; i < 3000; ++i) {
    const auto mu = spin_flip_spectrum(DensityMatrix::from_matrix(random_ginibre_state(rng, 1 + i % 4)));
    for (double v : mu) CHECK(v >= -1e-10);
  }
}

TEST_CASE("Werner concurrence and eof") {
  for (int k = 0; k <= 50; ++k) {
    const double p = k / 50.0;
    const DensityMatrix w = werner_state(p);
    const double c = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    CHECK(std::abs(concurrence(w) - c) <= 1e-12);
    CHECK(std::abs(negativity(w) - std::max(0.0, (3.0 * p - 1.0) / 4.0)) <= 1e-14);
  }
  const double c = 0.7;
  const double x = (1.0 + std::sqrt(1.0 - c * c)) / 2.0;
  const double h = -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
  CHECK(std::abs(eof(werner_state(0.8)) - h) <= 1e-12);
}

TEST_CASE("eof examples and monotonicity") {
  CHECK(eof_from_concurrence(1.0) == doctest::Approx(1.0));
  CHECK(eof_from_concurrence(0.0) == 0.0);
  CHECK(eof(DensityMatrix::from_pure(bell_phi_plus())) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  double previous = 0.0;
  for (int k = 1; k <= 10000; ++k) {
    const double e = eof_from_concurrence(k / 10000.0);
    CHECK(e >= previous);
    previous = e;
  }
}

TEST_CASE("negativity examples") {
  CHECK(negativity(DensityMatrix::from_pure(bell_phi_plus())) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(negativity(DensityMatrix::maximally_mixed()) == 0.0);
  CHECK(negativity(DensityMatrix::from_matrix(Matrix4::diagonal({0.5, 0.0, 0.0, 0.5}))) <= 1e-15);
}

TEST_CASE("criteria agree off the marginal band") {
  Rng rng(64);
  const double tau = 1e-10;
  for (int i = 0; i < 3000; ++i) {
    const Matrix4 m = i % 2 ? random_ginibre_state(rng) : random_local_werner(rng);
    const DensityMatrix rho = DensityMatrix::from_matrix(m);
    const SeparabilityReport rep = peres_test(rho);
    if (rep.marginal) continue;
    const EntanglementReport e = entanglement_report(rho);
    CHECK((e.concurrence > tau) == !rep.separable);
    CHECK((e.negativity > tau) == !rep.separable);
    CHECK((e.concurrence == 0.0) == (e.eof <= 1e-12));
  }
}

TEST_CASE("eof_upper_bound") {
  CHECK(eof_upper_bound(DensityMatrix::maximally_mixed()) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(eof(DensityMatrix::maximally_mixed()) == 0.0);

  const DensityMatrix w = werner_state(0.5);
  CHECK(eof_upper_bound(w) >= eof(w));

  const Matrix4 near = bell_phi_plus().projector() * 0.99 + Matrix4::identity() * 0.0025;
  const DensityMatrix rho = DensityMatrix::from_matrix(near);
  const double bound = eof_upper_bound(rho);
  CHECK(bound >= eof(rho));
  CHECK(bound <= 1.0);

  CHECK_THROWS_AS(eof_upper_bound(DensityMatrix::from_pure(bell_phi_plus())), NotApplicable);
  CHECK_FALSE(entanglement_report(DensityMatrix::from_pure(bell_phi_plus())).eof_upper_bound);
}

TEST_CASE("eof stays below the bound on full-rank states") {
  Rng rng(65);
  int rho_variant_violations = 0;
  for (int i = 0; i < 3000; ++i) {
    const DensityMatrix rho = DensityMatrix::from_matrix(random_ginibre_state(rng));
    const EntanglementReport e = entanglement_report(rho);
    REQUIRE(e.eof_upper_bound.has_value());
    CHECK(e.eof <= *e.eof_upper_bound + 1e-9);
    // The mixing argument itself suggests 1 − 4λ_min(ρ); record how often
    // that variant would fail.
    const double lmin = eig_hermitian_oracle(rho.matrix())[3];
    rho_variant_violations += e.eof > 1.0 - 4.0 * lmin + 1e-9;
  }
  MESSAGE("1 − 4λ_min(ρ) below eof on " << rho_variant_violations << " of 3000 states");
}
