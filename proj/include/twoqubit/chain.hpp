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
#include <vector>

#include "twoqubit/bloch.hpp"
#include "twoqubit/matrix.hpp"
#include "twoqubit/tolerances.hpp"

namespace twoqubit {

/// S|ab⟩ = |ba⟩.
Matrix4 swap_gate();

/// (1 − ε)ρ + ε I/4. Throws PreconditionError unless ε ∈ [0, 1].
DensityMatrix depolarize(const DensityMatrix& rho, double epsilon);

/// n applications of depolarize. Throws PreconditionError if n < 0.
DensityMatrix evolve_chain(const DensityMatrix& rho0, double epsilon, int n);

/// a|00⟩ + d|11⟩ with a ≥ d ≥ 0 and ad = q ∈ [0, 1/2].
PureState chain_initial_state(double q);

/// ¼[1 − (1 − ε)ⁿ(1 + 4q)], the smallest partial-transpose eigenvalue after
/// n noisy swaps of a pure pair with |ad − bc| = q.
double chain_lambda_min(double q, double epsilon, int n);

struct TransferDistance {
  std::uint64_t steps = 0;
  /// ε = 0: entanglement survives any number of steps.
  bool unbounded = false;
};

/// Largest n with chain_lambda_min(q, ε, n) < −tau_sep; 0 when even n = 0
/// fails. Requires q ∈ [0, 1/2] and ε ∈ [0, 1].
TransferDistance max_transfer_distance(double q, double epsilon,
                                       double tau_sep = tolerance::kSeparability);

/// 1 − (1 + 4q)^{−1/n}: chain_lambda_min(q, ε, n) = 0 at this ε.
/// Requires q ∈ (0, 1/2] and n ≥ 1.
double critical_noise(double q, int n);

struct ChainReport {
  /// chain_lambda_min for n = 0, 1, …
  std::vector<double> lambda_min_per_step;
  TransferDistance n_max;
  /// critical_noise(q, n) for the requested n.
  std::optional<double> epsilon_critical;
};

/// Steps run to n_max + 2, or to `n` if given and larger; an unbounded
/// distance without `n` reports steps 0..2. Throws PreconditionError past
/// one million steps.
ChainReport chain_report(double q, double epsilon, std::optional<int> n = {});

}  // namespace twoqubit
