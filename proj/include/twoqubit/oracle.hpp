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

#include "twoqubit/matrix.hpp"

// Ground-truth routines the closed forms are checked against. Nothing in
// here depends on spectrum.hpp; keep it that way.

namespace twoqubit {

/// λ⁴ + c3 λ³ + c2 λ² + c1 λ + c0.
struct MonicQuartic {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  double operator()(double x) const {
    return (((x + c3) * x + c2) * x + c1) * x + c0;
  }
};

/// Coefficients of det(λI − m) by the Faddeev–LeVerrier recurrence. Real
/// parts are returned; the input is expected to have a real characteristic
/// polynomial (Hermitian, or a product such as ρρ̃ with real spectrum).
MonicQuartic charpoly_flv(const Matrix4& m);

struct JacobiOptions {
  /// Convergence threshold on the off-diagonal Frobenius norm.
  double off_diagonal_tol = 1e-14;
  int max_sweeps = 64;
  /// Hermiticity precondition tolerance.
  double hermitian_tol = 1e-10;
};

/// Eigenvalues of a Hermitian 4×4 matrix by cyclic complex Jacobi rotations,
/// sorted descending. Throws PreconditionError for non-Hermitian input and
/// NonConvergence when the sweep cap is hit.
std::array<double, 4> eig_hermitian_oracle(const Matrix4& m,
                                           const JacobiOptions& opts = {});

}  // namespace twoqubit
