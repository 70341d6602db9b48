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

#include <array>
#include <optional>

#include "twoqubit/bloch.hpp"
#include "twoqubit/spectrum.hpp"
#include "twoqubit/tolerances.hpp"

namespace twoqubit {

struct SeparabilityOptions {
  /// Decision band on λ_min of the partial transpose.
  double tau_sep = tolerance::kSeparability;
  /// Agreement required between the coefficient map and the coefficients
  /// of the explicitly transposed matrix.
  double coeff_check = 1e-10;
  SolverOptions solver;
};

/// Coefficients of the partial transpose from those of ρ and its Bloch
/// tensor. Throws PreconditionError if c does not belong to t and
/// InternalInconsistency if the result disagrees with the coefficients of
/// partial_transpose(from_bloch(t)) by more than check_tol.
CharCoeffs pt_coeffs(const CharCoeffs& c, const BlochTensor& t,
                     double check_tol = 1e-10);

/// The explicit separability inequality 1 ≥ rhs, where rhs = 1 − 4λ_min of
/// the partial transpose written in terms of its coefficients. The branch is
/// the quartic_eigs branch of the partial-transpose polynomial.
struct SeparabilityInequality {
  double rhs = 0.0;
  bool holds = false;
  Branch branch = Branch::Generic;
};

SeparabilityInequality separability_inequality(const CharCoeffs& pt,
                                               const SeparabilityOptions& opt = {});

struct SeparabilityReport {
  bool separable = false;
  double lambda_min_pt = 0.0;
  Branch branch = Branch::Generic;
  /// |λ_min| ≤ τ_sep.
  bool marginal = false;
  CharCoeffs pt_coeffs;
  std::array<double, 4> pt_eigenvalues{};
  /// Verdict of the explicit inequality; equals `separable` off the
  /// marginal band, except for weakly entangled pure states whose PT
  /// coefficients are at the rounding level.
  SeparabilityInequality inequality;
};

/// Peres test through the closed-form spectrum of the partial transpose.
/// States with Tr ρ² ≥ 1 − 1e-13 use the pure-state spectrum instead
/// (branch PurePartialTranspose).
SeparabilityReport peres_test(const DensityMatrix& rho,
                              const SeparabilityOptions& opt = {});

/// {½(1 ± √(1 − 4|ad − bc|²)), ±|ad − bc|}, descending.
std::array<double, 4> pure_pt_spectrum(const PureState& psi);

/// |ad − bc| ≤ tau.
bool pure_separable(const PureState& psi, double tau = tolerance::kSeparability);

/// Smallest root of the residual cubic is ≥ −tol:
/// √(6 Tr Ω² − 2) cos(φ − π/3) ≤ 1, or Tr Ω² ≤ 5/9 when d = 0.
bool cubic_min_nonnegative(const CubicCoeffs& c,
                           double tol = tolerance::kSeparability,
                           const SolverOptions& opt = {});

/// Verdict from vanishing eigenvalues of the partial transpose: two or more
/// zeros mean separable; exactly one applies cubic_min_nonnegative to the
/// remaining cubic. Returns nullopt when the partial transpose has full rank.
std::optional<SeparabilityReport> rank_shortcut(const DensityMatrix& rho,
                                                const SeparabilityOptions& opt = {});

}  // namespace twoqubit
