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

#include "twoqubit/bloch.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "twoqubit/oracle.hpp"

namespace twoqubit {

BlochTensor::BlochTensor() { a_[0][0] = 1.0; }

BlochTensor::BlochTensor(const Array& a, double tol) : a_(a) {
  for (const auto& row : a_)
    for (double v : row)
      if (!std::isfinite(v))
        throw PreconditionError("BlochTensor: non-finite coefficient");
  if (std::abs(a_[0][0] - 1.0) > tol)
    throw PreconditionError("BlochTensor: a00 = " + std::to_string(a_[0][0]) +
                            " is not 1");
  a_[0][0] = 1.0;
}

Mat3 BlochTensor::correlations() const {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a_[i + 1][j + 1];
  return m;
}

double BlochTensor::purity() const {
  double s = 0.0;
  for (const auto& row : a_)
    for (double v : row) s += v * v;
  return 0.25 * s;
}

bool BlochTensor::in_physical_range(double tol) const {
  for (const auto& row : a_)
    for (double v : row)
      if (std::abs(v) > 1.0 + tol) return false;
  return true;
}

PureState::PureState(const std::array<Complex, 4>& amp, double tol) : amp_(amp) {
  double n = 0.0;
  for (const auto& z : amp_) n += std::norm(z);
  if (!std::isfinite(n) || std::abs(n - 1.0) > tol)
    throw PreconditionError("PureState: squared norm " + std::to_string(n) +
                            " is not 1");
}

PureState PureState::normalized(std::array<Complex, 4> amp) {
  double n = 0.0;
  for (const auto& z : amp) n += std::norm(z);
  if (!(n > 0.0) || !std::isfinite(n))
    throw PreconditionError("PureState: cannot normalize a zero vector");
  const double s = 1.0 / std::sqrt(n);
  for (auto& z : amp) z *= s;
  return PureState(amp);
}

namespace {

void check_hermitian_trace_one(const Matrix4& m, double herm_tol, double trace_tol,
                               const char* who) {
  if (!m.all_finite())
    throw PreconditionError(std::string(who) + ": non-finite entry");
  if (!is_hermitian(m, herm_tol))
    throw PreconditionError(std::string(who) + ": matrix is not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > trace_tol)
    throw PreconditionError(std::string(who) + ": trace " +
                            std::to_string(tr.real()) + " is not 1");
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const Matrix4& m,
                                         const DensityMatrixTolerances& tol) {
  check_hermitian_trace_one(m, tol.hermitian, tol.trace, "DensityMatrix");
  const auto ev = eig_hermitian_oracle(m);
  if (ev[3] < -tol.psd)
    throw PreconditionError("DensityMatrix: minimum eigenvalue " +
                            std::to_string(ev[3]) + " is negative");
  return DensityMatrix(m, true);
}

DensityMatrix DensityMatrix::hermitian_trace_one(const Matrix4& m,
                                                 const DensityMatrixTolerances& tol) {
  check_hermitian_trace_one(m, tol.hermitian, tol.trace, "DensityMatrix");
  return DensityMatrix(m, false);
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector(), true);
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Matrix4::identity() * 0.25, true);
}

PureState bell_phi_plus() {
  const double h = 1.0 / std::numbers::sqrt2;
  return PureState({h, 0.0, 0.0, h});
}

DensityMatrix werner_state(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw PreconditionError("werner_state: p must be in [0, 1]");
  return DensityMatrix::from_matrix(bell_phi_plus().projector() * p +
                                    Matrix4::identity() * (0.25 * (1.0 - p)));
}

Matrix4 pauli_product(int mu, int nu) { return kron(pauli(mu), pauli(nu)); }

BlochTensor to_bloch(const Matrix4& m, double tol) {
  check_hermitian_trace_one(m, tol, tol, "to_bloch");
  BlochTensor::Array a{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Complex v = (m * pauli_product(mu, nu)).trace();
      if (std::abs(v.imag()) > tol)
        throw PreconditionError("to_bloch: coefficient has imaginary part");
      a[mu][nu] = v.real();
    }
  return BlochTensor(a, tol);
}

BlochTensor to_bloch(const DensityMatrix& rho) { return to_bloch(rho.matrix()); }

Matrix4 from_bloch(const BlochTensor& t) {
  Matrix4 m;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (t(mu, nu) != 0.0) m += pauli_product(mu, nu) * (0.25 * t(mu, nu));
  return m;
}

Matrix2 reduced_state(const BlochTensor& t, Subsystem which) {
  const Vec3 xi = which == Subsystem::A ? t.xi_a() : t.xi_b();
  Matrix2 m = pauli(0);
  for (int i = 0; i < 3; ++i) m += pauli(i + 1) * xi[i];
  return m * 0.5;
}

Matrix2 partial_trace(const Matrix4& m, Subsystem keep) {
  Matrix2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        r(i, j) += keep == Subsystem::A ? m(2 * i + k, 2 * j + k)
                                        : m(2 * k + i, 2 * k + j);
  return r;
}

Matrix4 partial_transpose(const Matrix4& m) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + l, 2 * j + k) = m(2 * i + k, 2 * j + l);
  return out;
}

Matrix4 partial_transpose_a(const Matrix4& m) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * j + k, 2 * i + l) = m(2 * i + k, 2 * j + l);
  return out;
}

BlochTensor partial_transpose_bloch(const BlochTensor& t) {
  // σy is the only Pauli matrix that changes sign under transposition.
  auto a = t.coefficients();
  for (int mu = 0; mu < 4; ++mu) a[mu][2] = -a[mu][2];
  return BlochTensor(a);
}

}  // namespace twoqubit
