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

#include "twoqubit/chain.hpp"

#include <algorithm>
#include <cmath>

#include "twoqubit/errors.hpp"

namespace twoqubit {

namespace {

// Longest per-step table chain_report will build.
constexpr std::uint64_t kMaxReportSteps = 1'000'000;

void check_q(double q) {
  if (!(q >= 0.0 && q <= 0.5)) throw PreconditionError("q must lie in [0, 1/2]");
}

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw PreconditionError("epsilon must lie in [0, 1]");
}

}  // namespace

Matrix4 swap_gate() {
  Matrix4 s;
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

DensityMatrix depolarize(const DensityMatrix& rho, double epsilon) {
  check_epsilon(epsilon);
  const Matrix4 m =
      rho.matrix() * (1.0 - epsilon) + Matrix4::identity() * (epsilon / 4.0);
  return DensityMatrix::hermitian_trace_one(m);
}

DensityMatrix evolve_chain(const DensityMatrix& rho0, double epsilon, int n) {
  if (n < 0) throw PreconditionError("step count must be nonnegative");
  check_epsilon(epsilon);
  DensityMatrix rho = rho0;
  for (int i = 0; i < n; ++i) rho = depolarize(rho, epsilon);
  return rho;
}

PureState chain_initial_state(double q) {
  check_q(q);
  const double a = std::sqrt((1.0 + std::sqrt(1.0 - 4.0 * q * q)) / 2.0);
  const double d = q / a;
  return PureState({a, 0.0, 0.0, d});
}

double chain_lambda_min(double q, double epsilon, int n) {
  check_q(q);
  check_epsilon(epsilon);
  if (n < 0) throw PreconditionError("step count must be nonnegative");
  const double decay = n == 0 ? 1.0 : std::pow(1.0 - epsilon, n);
  return 0.25 * (1.0 - decay * (1.0 + 4.0 * q));
}

TransferDistance max_transfer_distance(double q, double epsilon,
                                       double tau_sep) {
  check_q(q);
  check_epsilon(epsilon);
  const auto entangled = [&](std::uint64_t n) {
    // (1 − ε)ⁿ(1 + 4q) > 1 + 4τ, compared in logs.
    const double lhs = static_cast<double>(n) * std::log1p(-epsilon) +
                       std::log1p(4.0 * q);
    return lhs > std::log1p(4.0 * tau_sep);
  };
  if (!entangled(0)) return {0, false};
  if (epsilon == 0.0) return {0, true};
  if (epsilon == 1.0) return {0, false};

  const double bound =
      (std::log1p(4.0 * q) - std::log1p(4.0 * tau_sep)) / -std::log1p(-epsilon);
  auto n = static_cast<std::uint64_t>(std::max(std::floor(bound), 0.0));
  while (n > 0 && !entangled(n)) --n;
  while (entangled(n + 1)) ++n;
  return {n, false};
}

double critical_noise(double q, int n) {
  if (!(q > 0.0 && q <= 0.5)) throw PreconditionError("q must lie in (0, 1/2]");
  if (n < 1) throw PreconditionError("n must be at least 1");
  return -std::expm1(-std::log1p(4.0 * q) / n);
}

ChainReport chain_report(double q, double epsilon, std::optional<int> n) {
  ChainReport out;
  out.n_max = max_transfer_distance(q, epsilon);
  std::uint64_t last = out.n_max.unbounded ? 2 : out.n_max.steps + 2;
  if (n) {
    if (*n < 0) throw PreconditionError("step count must be nonnegative");
    last = std::max<std::uint64_t>(last, static_cast<std::uint64_t>(*n));
    if (q > 0.0 && *n >= 1) out.epsilon_critical = critical_noise(q, *n);
  }
  if (last > kMaxReportSteps)
    throw PreconditionError("transfer distance too long to tabulate");
  for (std::uint64_t k = 0; k <= last; ++k)
    out.lambda_min_per_step.push_back(
        chain_lambda_min(q, epsilon, static_cast<int>(k)));
  return out;
}

}  // namespace twoqubit
