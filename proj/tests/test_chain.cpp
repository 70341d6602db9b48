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
#include "twoqubit/chain.hpp"
#include "twoqubit/entanglement.hpp"
#include "twoqubit/errors.hpp"
#include "twoqubit/oracle.hpp"
#include "twoqubit/separability.hpp"

using namespace twoqubit;

TEST_CASE("swap_gate") {
  const Matrix4 s = swap_gate();
  const std::array<Complex, 4> k01{0.0, 1.0, 0.0, 0.0};
  const std::array<Complex, 4> k10{0.0, 0.0, 1.0, 0.0};
  const std::array<Complex, 4> k00{1.0, 0.0, 0.0, 0.0};
  CHECK((s * k01) == k10);
  CHECK((s * k00) == k00);
  CHECK((s * s).approx_equal(Matrix4::identity(), 0.0));
}

TEST_CASE("depolarize") {
  const DensityMatrix bell = DensityMatrix::from_pure(bell_phi_plus());
  CHECK(depolarize(bell, 0.0).matrix().approx_equal(bell.matrix(), 0.0));
  CHECK(depolarize(bell, 1.0).matrix().approx_equal(Matrix4::identity() * 0.25, 0.0));
  CHECK(depolarize(bell, 0.5).matrix().approx_equal(werner_state(0.5).matrix(), 1e-15));
  CHECK(std::abs(depolarize(bell, 0.3).matrix().trace() - 1.0) <= 1e-15);
  CHECK_THROWS_AS(depolarize(bell, -0.1), PreconditionError);
  CHECK_THROWS_AS(depolarize(bell, 1.1), PreconditionError);
}

TEST_CASE("evolve_chain") {
  const DensityMatrix bell = DensityMatrix::from_pure(bell_phi_plus());
  CHECK(evolve_chain(bell, 0.1, 0).matrix().approx_equal(bell.matrix(), 0.0));
  CHECK(evolve_chain(bell, 0.1, 1).matrix().approx_equal(werner_state(0.9).matrix(), 1e-15));
  const DensityMatrix ten = evolve_chain(bell, 0.1, 10);
  CHECK(ten.matrix().approx_equal(werner_state(std::pow(0.9, 10)).matrix(), 1e-12));
  CHECK_FALSE(peres_test(ten).separable);
  CHECK_THROWS_AS(evolve_chain(bell, 0.1, -1), PreconditionError);
}

TEST_CASE("chain_lambda_min") {
  for (int n : {0, 1, 5, 100}) CHECK(chain_lambda_min(0.5, 0.0, n) == -0.5);
  CHECK(std::abs(chain_lambda_min(0.5, 0.1, 10) - 0.25 * (1.0 - 3.0 * std::pow(0.9, 10))) <= 1e-15);
  CHECK(chain_lambda_min(0.5, 0.1, 10) == doctest::Approx(-0.01153).epsilon(1e-3));
  for (int n = 0; n < 50; ++n) CHECK(chain_lambda_min(0.0, 0.2, n) >= 0.0);
  CHECK_THROWS_AS(chain_lambda_min(0.6, 0.1, 1), PreconditionError);
  CHECK_THROWS_AS(chain_lambda_min(0.5, 0.1, -1), PreconditionError);
}

TEST_CASE("chain_lambda_min equals the simulated partial-transpose minimum") {
  for (double q : {0.1, 0.25, 0.5}) {
    const DensityMatrix start = DensityMatrix::from_pure(chain_initial_state(q));
    for (double eps : {0.01, 0.05, 0.1, 0.2, 0.3, 0.5}) {
      DensityMatrix rho = start;
      for (int n = 0; n <= 120; ++n) {
        const double oracle = eig_hermitian_oracle(partial_transpose(rho.matrix()))[3];
        CHECK(std::abs(chain_lambda_min(q, eps, n) - oracle) <= 1e-10);
        rho = depolarize(rho, eps);
      }
    }
  }
}

TEST_CASE("chain_initial_state") {
  for (double q : {0.0, 0.1, 0.3, 0.5}) {
    const PureState s = chain_initial_state(q);
    CHECK(std::abs(std::abs(s.determinant()) - q) <= 1e-15);
  }
}

TEST_CASE("max_transfer_distance") {
  CHECK(max_transfer_distance(0.5, 0.1).steps == 10);
  CHECK(max_transfer_distance(0.5, 0.01).steps == 109);
  CHECK(max_transfer_distance(0.5, 0.1040415).steps == 10);
  // 0.104042 lies just above 1 − 3^{−1/10} = 0.10404154…
  CHECK(max_transfer_distance(0.5, 0.104042).steps == 9);
  CHECK(max_transfer_distance(0.5, 0.105).steps == 9);
  CHECK(max_transfer_distance(0.0, 0.1).steps == 0);
  CHECK(max_transfer_distance(0.5, 0.0).unbounded);
  CHECK(max_transfer_distance(0.5, 1.0).steps == 0);

  for (double q : {0.05, 0.25, 0.5})
    for (double eps = 0.005; eps < 0.9; eps += 0.005) {
      const auto n = max_transfer_distance(q, eps).steps;
      CHECK(chain_lambda_min(q, eps, static_cast<int>(n)) < -1e-10);
      CHECK(chain_lambda_min(q, eps, static_cast<int>(n) + 1) >= -1e-10);
    }
}

TEST_CASE("chain monotonicity") {
  for (double q : {0.1, 0.25, 0.5}) {
    std::uint64_t last = ~std::uint64_t{0};
    for (int k = 1; k <= 100; ++k) {
      const double eps = k / 200.0;
      const auto n = max_transfer_distance(q, eps).steps;
      CHECK(n <= last);
      last = n;
      for (int s = 0; s < 30; ++s) {
        CHECK(chain_lambda_min(q, eps, s + 1) >= chain_lambda_min(q, eps, s));
        CHECK(chain_lambda_min(q, eps + 0.005, s) >= chain_lambda_min(q, eps, s));
      }
    }
  }
}

TEST_CASE("critical_noise") {
  CHECK(std::abs(critical_noise(0.5, 10) - 0.104042) <= 1e-6);
  CHECK(std::abs(critical_noise(0.5, 1) - 2.0 / 3.0) <= 1e-15);
  CHECK(std::abs(critical_noise(0.5, 2) - (1.0 - 1.0 / std::sqrt(3.0))) <= 1e-15);
  CHECK(std::abs(critical_noise(0.5, 2) - 0.42265) <= 1e-5);
  for (double q : {0.1, 0.25, 0.5})
    for (int n = 1; n <= 200; n += 7) {
      const double eps = critical_noise(q, n);
      CHECK(std::abs(chain_lambda_min(q, eps, n)) <= 1e-12);
      CHECK(max_transfer_distance(q, eps - 1e-9).steps >= static_cast<std::uint64_t>(n));
    }
  CHECK_THROWS_AS(critical_noise(0.0, 3), PreconditionError);
  CHECK_THROWS_AS(critical_noise(0.5, 0), PreconditionError);
}

TEST_CASE("chain_report") {
  const ChainReport r = chain_report(0.5, 0.1, 10);
  CHECK(r.n_max.steps == 10);
  CHECK(r.lambda_min_per_step.size() == 13);
  REQUIRE(r.epsilon_critical.has_value());
  CHECK(std::abs(*r.epsilon_critical - 0.104042) <= 1e-6);
  for (std::size_t k = 1; k < r.lambda_min_per_step.size(); ++k)
    CHECK(r.lambda_min_per_step[k] >= r.lambda_min_per_step[k - 1]);
  CHECK(chain_report(0.5, 0.0).n_max.unbounded);
  CHECK_THROWS_AS(chain_report(0.5, 1e-9), PreconditionError);
}

TEST_CASE("four-qubit swap transfers the Bell pair") {
  // Qubits ordered (C, A, B, D); Alice–Charlie and Bob–David swap.
  const std::array<Complex, 2> c{0.6, Complex(0.0, 0.8)};
  const std::array<Complex, 2> d{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};
  const auto bell = bell_phi_plus().amplitudes();
  const auto state = kron(kron(c, bell), d);
  const auto ss = kron(swap_gate(), swap_gate());
  const auto out = ss * state;

  // Expected (|0⟩|cd⟩|0⟩ + |1⟩|cd⟩|1⟩)/√2.
  const auto cd = kron(c, d);
  std::array<Complex, 16> expected{};
  for (int i = 0; i < 4; ++i) {
    expected[0 * 8 + i * 2 + 0] = cd[i] / std::sqrt(2.0);
    expected[1 * 8 + i * 2 + 1] = cd[i] / std::sqrt(2.0);
  }
  for (int i = 0; i < 16; ++i) CHECK(std::abs(out[i] - expected[i]) <= 1e-15);

  // Reduced state of qubits 1 and 4.
  Matrix4 rho;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          Complex s = 0.0;
          for (int mid = 0; mid < 4; ++mid)
            s += out[a * 8 + mid * 2 + b] * std::conj(out[a2 * 8 + mid * 2 + b2]);
          rho(2 * a + b, 2 * a2 + b2) = s;
        }
  CHECK(std::abs(concurrence(DensityMatrix::from_matrix(rho)) - 1.0) <= 1e-12);
}
