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

#include <optional>

#include "twoqubit/bloch.hpp"
#include "twoqubit/matrix.hpp"
#include "twoqubit/separability.hpp"

namespace twoqubit {

/// ρ̃ = (σy⊗σy) ρ* (σy⊗σy).
Matrix4 spin_flip(const DensityMatrix& rho);

/// Eigenvalues of ρρ̃, descending, from the closed-form solvers applied to
/// the trace-normalized characteristic polynomial of a Hermitian matrix with
/// the same spectrum. Small negative values are returned as zero; values
/// below −1e-8·Tr(ρρ̃) throw InternalInconsistency. Throws PreconditionError
/// if ρ has an eigenvalue below −1e-10.
std::array<double, 4> spin_flip_spectrum(const DensityMatrix& rho);

/// Wootters concurrence max(0, √μ1 − √μ2 − √μ3 − √μ4).
double concurrence(const DensityMatrix& rho);

/// −x log2 x − (1 − x) log2(1 − x), zero at the endpoints.
double binary_entropy(double x);

/// h((1 + √(1 − C²))/2).
double eof_from_concurrence(double c);

double eof(const DensityMatrix& rho);

/// Sum of |λ| over negative eigenvalues of the partial transpose.
double negativity(const DensityMatrix& rho);

/// Right-hand side of the separability inequality clamped to [0, 1], as an
/// upper bound on the entanglement of formation. Throws NotApplicable when
/// ρ has an eigenvalue within zero_tol of zero.
double eof_upper_bound(const DensityMatrix& rho,
                       double zero_tol = tolerance::kBranch);

struct EntanglementReport {
  double concurrence = 0.0;
  double eof = 0.0;
  double negativity = 0.0;
  /// Absent for rank-deficient states.
  std::optional<double> eof_upper_bound;
};

EntanglementReport entanglement_report(const DensityMatrix& rho);

}  // namespace twoqubit
