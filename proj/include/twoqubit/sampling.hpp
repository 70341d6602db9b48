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

#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "twoqubit/bloch.hpp"
#include "twoqubit/matrix.hpp"

namespace twoqubit {

/// Seeded generator with platform-independent uniform and normal draws
/// (std::normal_distribution is implementation-defined, so it is avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal by Box–Muller.
  double normal();
  /// Complex normal with independent standard real and imaginary parts.
  Complex complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// splitmix64 of (master, index); used to give worker shards independent
/// streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// G G† / Tr(G G†) with G a 4×k complex Gaussian matrix, k = rank.
/// Throws PreconditionError unless 1 ≤ rank ≤ 4.
Matrix4 random_ginibre_state(Rng& rng, int rank = 4);

/// I/4 + κ H₀ with H₀ the traceless part of a Gaussian Hermitian matrix
/// and ‖κ H₀‖_F uniform in [0.1, 0.5]. Usually not positive semidefinite.
Matrix4 random_hermitian_trace_one(Rng& rng);

/// Haar-random two-qubit pure state.
PureState random_pure_state(Rng& rng);

/// Haar-random single-qubit state.
std::array<Complex, 2> random_qubit(Rng& rng);

/// Haar-random element of SU(2).
Matrix2 random_su2(Rng& rng);

/// (U_A⊗U_B) W(p) (U_A⊗U_B)† with p uniform in [0, 1].
Matrix4 random_local_werner(Rng& rng);

/// Bloch tensor with a00 = 1 and every other entry uniform in [−1, 1].
/// Generally not a density matrix.
BlochTensor random_bloch_tensor(Rng& rng);

}  // namespace twoqubit
