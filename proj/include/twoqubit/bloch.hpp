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
#include "twoqubit/tolerances.hpp"

namespace twoqubit {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Real coefficients a_{μν} of ρ = ¼ Σ a_{μν} σ_μ⊗σ_ν, with a_00 = 1.
///
/// Row index μ belongs to qubit A, column index ν to qubit B. The named views
/// follow the usual decomposition: xi_a() = (a10, a20, a30) and
/// xi_b() = (a01, a02, a03) are the local Bloch vectors and correlations()
/// is the 3×3 block A = {a_ij}, i, j ≥ 1, whose rows are a⃗1, a⃗2, a⃗3.
class BlochTensor {
 public:
  using Array = std::array<std::array<double, 4>, 4>;

  /// Maximally mixed state (all coefficients zero except a00).
  BlochTensor();

  /// Throws PreconditionError unless |a00 − 1| ≤ tol and every entry is
  /// finite; a00 is then stored as exactly 1.
  explicit BlochTensor(const Array& a, double tol = tolerance::kInput);

  double operator()(int mu, int nu) const { return a_[mu][nu]; }
  const Array& coefficients() const { return a_; }

  Vec3 xi_a() const { return {a_[1][0], a_[2][0], a_[3][0]}; }
  Vec3 xi_b() const { return {a_[0][1], a_[0][2], a_[0][3]}; }
  Mat3 correlations() const;
  /// Row i (1..3) of the correlation block.
  Vec3 row(int i) const { return {a_[i][1], a_[i][2], a_[i][3]}; }

  /// ¼ Σ a_{μν}², equal to Tr ρ² for the represented matrix.
  double purity() const;

  /// |a_{μν}| ≤ 1 + tol for all entries (holds for every density matrix).
  bool in_physical_range(double tol = tolerance::kInput) const;

 private:
  Array a_{};
};

/// Two-qubit pure state a|00⟩ + b|01⟩ + c|10⟩ + d|11⟩.
class PureState {
 public:
  /// Throws PreconditionError unless Σ|amp|² = 1 within tol.
  explicit PureState(const std::array<Complex, 4>& amp,
                     double tol = tolerance::kNormalization);

  /// Normalizes a nonzero vector.
  static PureState normalized(std::array<Complex, 4> amp);

  const std::array<Complex, 4>& amplitudes() const { return amp_; }
  /// ad − bc.
  Complex determinant() const { return amp_[0] * amp_[3] - amp_[1] * amp_[2]; }
  Matrix4 projector() const { return Matrix4::projector(amp_); }

 private:
  std::array<Complex, 4> amp_;
};

struct DensityMatrixTolerances {
  double hermitian = tolerance::kInput;
  double trace = tolerance::kInput;
  double psd = tolerance::kPsd;
};

/// A 4×4 Hermitian, unit-trace matrix. Values built with from_matrix are
/// also positive semidefinite (checked with the Jacobi oracle); values built
/// with hermitian_trace_one skip that check, which is what partial
/// transposes and general Hermitian trace-one inputs need.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const Matrix4& m,
                                   const DensityMatrixTolerances& tol = {});
  static DensityMatrix hermitian_trace_one(const Matrix4& m,
                                           const DensityMatrixTolerances& tol = {});
  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed();

  const Matrix4& matrix() const { return m_; }
  bool psd_checked() const { return psd_checked_; }

 private:
  DensityMatrix(const Matrix4& m, bool psd) : m_(m), psd_checked_(psd) {}

  Matrix4 m_;
  bool psd_checked_;
};

/// |Φ⁺⟩ = (|00⟩ + |11⟩)/√2.
PureState bell_phi_plus();

/// p|Φ⁺⟩⟨Φ⁺| + (1 − p) I/4.
DensityMatrix werner_state(double p);

/// σ_μ ⊗ σ_ν.
Matrix4 pauli_product(int mu, int nu);

/// a_{μν} = Re Tr(m σ_μ⊗σ_ν). Throws PreconditionError if m is not
/// Hermitian or not unit trace within tol.
BlochTensor to_bloch(const Matrix4& m, double tol = tolerance::kInput);
BlochTensor to_bloch(const DensityMatrix& rho);

/// ¼ Σ a_{μν} σ_μ⊗σ_ν.
Matrix4 from_bloch(const BlochTensor& t);

enum class Subsystem { A, B };

/// (σ0 + ξ⃗·σ⃗)/2 for the requested qubit.
Matrix2 reduced_state(const BlochTensor& t, Subsystem which);

/// Partial trace over the other qubit, computed on matrix entries.
Matrix2 partial_trace(const Matrix4& m, Subsystem keep);

/// Transpose on qubit B: entry (2i+k, 2j+l) ↦ (2i+l, 2j+k).
Matrix4 partial_transpose(const Matrix4& m);

/// Transpose on qubit A: entry (2i+k, 2j+l) ↦ (2j+k, 2i+l).
Matrix4 partial_transpose_a(const Matrix4& m);

/// Partial transpose in coefficient form: a_{μ2} ↦ −a_{μ2}.
BlochTensor partial_transpose_bloch(const BlochTensor& t);

}  // namespace twoqubit
