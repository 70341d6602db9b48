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
#include <span>
#include <string_view>

#include "twoqubit/bloch.hpp"
#include "twoqubit/matrix.hpp"
#include "twoqubit/tolerances.hpp"

namespace twoqubit {

/// Characteristic polynomial of the traceless part, in x = λ − 1/4:
/// x⁴ + p x² + q x + r.
struct CenteredCoeffs {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
};

/// det(λ − Ω) = λ⁴ − λ³ + b2 λ² + b1 λ + b0 for Hermitian, unit-trace Ω.
///
/// `centered` carries the same polynomial shifted to 1/4. It is filled from
/// the shifted matrix (or from homogeneous Bloch expressions) rather than by
/// expanding the b's, because near I/4 the b-form cancels catastrophically.
struct CharCoeffs {
  double b0 = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double tr2 = 0.0;
  CenteredCoeffs centered;

  /// Builds the centered form by expansion. Only accurate away from I/4.
  static CharCoeffs from_b(double b0, double b1, double b2, double tr2);

  /// λ⁴ − λ³ + b2 λ² + b1 λ + b0.
  double operator()(double lambda) const;
};

/// Coefficients from the Faddeev–LeVerrier recursion. Throws
/// PreconditionError unless m is Hermitian and unit trace within tol.
CharCoeffs coeffs_from_traces(const Matrix4& m, double tol = tolerance::kInput);

/// Same without input checks, for matrices known to have a real spectrum
/// summing to one (for example a normalized ρρ̃).
CharCoeffs coeffs_from_matrix(const Matrix4& m);

/// Closed-form coefficients from Bloch parameters.
CharCoeffs coeffs_from_bloch(const BlochTensor& t);

/// c1 = √(12b0 + 3b1 + b2²) and c2 = 27b1² + b0(27 − 72b2) + 9b1b2 + 2b2³
/// evaluated literally on the b's.
double c1_squared_from_b(const CharCoeffs& c);
double c2_from_b(const CharCoeffs& c);

struct SolverOptions {
  /// c1 ≤ triple_band·|p| counts as c1 = 0 (triple root).
  double triple_band = 1e-4;
  /// |cos 3φ| ≤ branch counts as c2 = 0; also the d = 0 and tr2 = 1/3 bands
  /// of the cubic solver.
  double branch = tolerance::kBranch;
  /// √(tr2 − 1/4) at or below this is the maximally mixed spectrum.
  double quarter_spread = 1e-15;
  /// Relative clamp for radicands and the discriminant sign.
  double radicand = tolerance::kRadicand;
  /// Absolute polynomial residual beyond which a result is rejected.
  double residual = tolerance::kResidual;
  /// Estimated magnitude at or below which an eigenvalue counts as zero:
  /// |b0/b1| for one zero; |b1/b2| and √|b0/b2| for two.
  double zero = tolerance::kZeroEigenvalue;
  /// Coefficients at or below this are rounding noise.
  double coefficient_noise = 1e-15;
};

struct TrigParams {
  double c1 = 0.0;
  double c2 = 0.0;
  /// acos(c2 / 2c1³)/3 in [0, π/3]; zero when degenerate.
  double phi = 0.0;
  /// c1 inside the triple-root band; phi is then meaningless.
  bool degenerate = false;
};

/// c1, c2 and φ from the centered coefficients (c1² = p² + 12r,
/// c2 = 2p³ − 72pr + 27q²). Throws InternalInconsistency if c1² or the
/// discriminant 4c1⁶ − c2² is negative beyond the relative clamp.
TrigParams trig_params(const CharCoeffs& c, const SolverOptions& opt = {});

/// φ through the principal cube root, Arg[(c2 + √(c2² − 4c1⁶))^{1/3}].
double phi_via_cube_root(double c1, double c2);

/// cos φ = c1/(2^{2/3} w) + w/(2·2^{1/3} c1), w = (c2 + √(c2² − 4c1⁶))^{1/3}.
double cos_phi_via_cube_root(double c1, double c2);

enum class Branch {
  Generic,
  C2Zero,
  DoubleZeroCase1,
  DoubleZeroCase2,
  AllQuarter,
  RankTwo,
  Cubic,
  CubicD0,
  CubicAllThird,
  /// Partial transpose of a pure state, from its amplitudes.
  PurePartialTranspose,
};

std::string_view to_string(Branch b);

struct QuarticSpectrum {
  std::array<double, 4> lambdas{};  // descending
  Branch branch = Branch::Generic;
};

/// Closed-form quartic roots. Only returns Generic, C2Zero,
/// DoubleZeroCase1/2 or AllQuarter. Throws InternalInconsistency if any root
/// misses the polynomial by more than opt.residual.
QuarticSpectrum quartic_eigs(const CharCoeffs& c, const SolverOptions& opt = {});

/// Residual cubic λ³ − λ² + b2 λ + b1 after dividing out a zero eigenvalue.
struct CubicCoeffs {
  double b1 = 0.0;
  double b2 = 0.0;
  double tr2 = 0.0;
  double d = 0.0;  // 2 − 27b1 − 9b2

  static CubicCoeffs from(const CharCoeffs& c);
};

struct CubicSpectrum {
  std::array<double, 3> lambdas{};  // descending
  Branch branch = Branch::Cubic;
};

/// Roots of the residual cubic. Throws PreconditionError if tr2 < 1/3 − 1e-10.
CubicSpectrum cubic_eigs(const CubicCoeffs& c, const SolverOptions& opt = {});

/// (1 ± √(2tr2 − 1))/2. Throws PreconditionError outside [1/2, 1] ± 1e-10.
std::array<double, 2> rank2_eigs(double tr2);

/// Σλ² ≥ 1/m − 1e-10, and Σλ² ≤ 1 + 1e-10 when every λ ≥ 0.
/// Throws PreconditionError unless 1 ≤ m ≤ 4.
bool purity_bound_check(std::span<const double> lambdas, int m);

/// Full spectrum with rank routing: two vanishing eigenvalues go to the
/// two-eigenvalue formula, one to cubic_eigs, otherwise quartic_eigs.
QuarticSpectrum eigenvalues(const CharCoeffs& c, const SolverOptions& opt = {});

}  // namespace twoqubit
