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

#include "twoqubit/bloch.hpp"

namespace twoqubit::detail {

inline double dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

inline Vec3 mul(const Mat3& m, const Vec3& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

inline Mat3 transpose(const Mat3& m) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

inline Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline double trace(const Mat3& m) { return m[0][0] + m[1][1] + m[2][2]; }

/// Adjugate: adj(A) = A² − (Tr A) A + ½((Tr A)² − Tr A²) I.
inline Mat3 adjugate(const Mat3& m) {
  Mat3 a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  return a;
}

/// Scalar invariants of a Bloch tensor that the coefficient formulas use.
struct BlochInvariants {
  Vec3 xi_a{}, xi_b{};
  Mat3 a{};
  double det_a = 0.0;       // (a⃗1 × a⃗2)·a⃗3
  double xa_a_xb = 0.0;     // ξ_Aᵀ A ξ_B
  double xb_adj_xa = 0.0;   // ξ_Bᵀ adj(A) ξ_A
  double minors_sq = 0.0;   // |a⃗1×a⃗2|² + |a⃗2×a⃗3|² + |a⃗3×a⃗1|²
  double traceless_sq = 0.0;  // Σ a_{μν}² over (μ, ν) ≠ (0, 0)
};

inline BlochInvariants invariants(const BlochTensor& t) {
  BlochInvariants s;
  s.xi_a = t.xi_a();
  s.xi_b = t.xi_b();
  s.a = t.correlations();
  const Vec3 a1 = t.row(1), a2 = t.row(2), a3 = t.row(3);
  const Vec3 c12 = cross(a1, a2), c23 = cross(a2, a3), c31 = cross(a3, a1);
  s.det_a = dot(c12, a3);
  s.xa_a_xb = dot(s.xi_a, mul(s.a, s.xi_b));
  s.xb_adj_xa = dot(s.xi_b, mul(adjugate(s.a), s.xi_a));
  s.minors_sq = dot(c12, c12) + dot(c23, c23) + dot(c31, c31);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (mu != 0 || nu != 0) s.traceless_sq += t(mu, nu) * t(mu, nu);
  return s;
}

}  // namespace twoqubit::detail
