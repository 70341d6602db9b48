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

// Independent reference computations used only by the tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>

#include "twoqubit/matrix.hpp"
#include "twoqubit/oracle.hpp"

namespace twoqubit::testing {

/// (e1, e2, e3, e4) of four numbers.
inline std::array<double, 4> elementary_symmetric(const std::array<double, 4>& l) {
  std::array<double, 4> e{};
  for (int i = 0; i < 4; ++i) {
    e[0] += l[i];
    for (int j = i + 1; j < 4; ++j) {
      e[1] += l[i] * l[j];
      for (int k = j + 1; k < 4; ++k) {
        e[2] += l[i] * l[j] * l[k];
        for (int m = k + 1; m < 4; ++m) e[3] += l[i] * l[j] * l[k] * l[m];
      }
    }
  }
  return e;
}

inline double max_abs_diff(const std::array<double, 4>& a,
                           const std::array<double, 4>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

template <std::size_t N>
std::array<double, N> sorted_desc(std::array<double, N> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

/// Partial transpose on B written out entry by entry in the |ab⟩ basis.
inline Matrix4 pt_by_indices(const Matrix4& m) {
  Matrix4 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          out(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
  return out;
}

/// Unpivoted Cholesky factor L (ρ = L L†) of a positive definite matrix.
inline Matrix4 cholesky(const Matrix4& m) {
  Matrix4 l;
  for (int j = 0; j < 4; ++j) {
    double d = m(j, j).real();
    for (int k = 0; k < j; ++k) d -= std::norm(l(j, k));
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < 4; ++i) {
      Complex s = m(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / l(j, j).real();
    }
  }
  return l;
}

/// Concurrence of a full-rank state from the Jacobi spectrum of the
/// Hermitian L† ρ̃ L, which shares its spectrum with ρρ̃.
inline double concurrence_oracle(const Matrix4& rho) {
  const Matrix4 yy = kron(pauli(2), pauli(2));
  const Matrix4 flipped = yy * rho.conj() * yy;
  const Matrix4 l = cholesky(rho);
  Matrix4 h = l.adjoint() * flipped * l;
  h = (h + h.adjoint()) * 0.5;
  const auto mu = eig_hermitian_oracle(h);
  double c = std::sqrt(std::max(mu[0], 0.0));
  for (int i = 1; i < 4; ++i) c -= std::sqrt(std::max(mu[i], 0.0));
  return std::max(c, 0.0);
}

/// Unitary that maps the computational basis onto an entangled basis, used
/// to hide a chosen spectrum inside a dense matrix.
inline Matrix4 mixing_unitary() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix4 cnot = Matrix4::identity();
  cnot(2, 2) = 0.0;
  cnot(3, 3) = 0.0;
  cnot(2, 3) = 1.0;
  cnot(3, 2) = 1.0;
  Matrix2 h;
  h(0, 0) = s;
  h(0, 1) = s;
  h(1, 0) = s;
  h(1, 1) = -s;
  Matrix2 phase;
  phase(0, 0) = std::polar(1.0, 0.3);
  phase(1, 1) = std::polar(1.0, -1.1);
  const Matrix4 first = kron(h, Matrix2::identity());
  const Matrix4 second = kron(phase, h);
  return second * cnot * first;
}

inline Matrix4 with_spectrum(const std::array<double, 4>& d) {
  const Matrix4 u = mixing_unitary();
  return u * Matrix4::diagonal(d) * u.adjoint();
}

}  // namespace twoqubit::testing
