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

// Default tolerances. Every routine that uses one takes it as a parameter
// defaulted to the value below.

namespace twoqubit::tolerance {

/// Hermiticity and unit-trace checks on inputs.
inline constexpr double kInput = 1e-10;
/// Minimum eigenvalue accepted as positive semidefinite.
inline constexpr double kPsd = 1e-10;
/// Pure-state normalization.
inline constexpr double kNormalization = 1e-12;
/// Branch band for the closed-form solvers.
inline constexpr double kBranch = 1e-8;
/// Negative radicands in [-kRadicand·scale, 0) are clamped to zero.
inline constexpr double kRadicand = 1e-9;
/// Polynomial residual above which a closed-form result is rejected.
inline constexpr double kResidual = 1e-6;
/// Decision band on the minimum partial-transpose eigenvalue.
inline constexpr double kSeparability = 1e-10;
/// Eigenvalues estimated below this from the low-order coefficients are
/// treated as exact zeros.
inline constexpr double kZeroEigenvalue = 1e-12;

}  // namespace twoqubit::tolerance
