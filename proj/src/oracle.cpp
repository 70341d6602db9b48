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

#include "twoqubit/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace twoqubit {

MonicQuartic charpoly_flv(const Matrix4& m) {
  // M_k = m M_{k-1} + c_{4-k+1} I,  c_{4-k} = -Tr(m M_k) / k.
  std::array<Complex, 5> c{};
  c[4] = 1.0;
  Matrix4 mk;
  const Matrix4 id = Matrix4::identity();
  for (int k = 1; k <= 4; ++k) {
    mk = m * mk + c[4 - k + 1] * id;
    c[4 - k] = -(m * mk).trace() / static_cast<double>(k);
  }
  return MonicQuartic{c[0].real(), c[1].real(), c[2].real(), c[3].real()};
}

namespace {

double off_diagonal_norm(const Matrix4& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Unitary J with (J† a J)(p, q) = 0: a phase on column q makes the pivot
// real, then a real Jacobi rotation annihilates it.
Matrix4 jacobi_rotation(const Matrix4& a, std::size_t p, std::size_t q) {
  const Complex z = a(p, q);
  const double g = std::abs(z);
  const Complex phase = std::conj(z / g);
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  Matrix4 j = Matrix4::identity();
  j(p, p) = c;
  j(p, q) = s;
  j(q, p) = -s * phase;
  j(q, q) = c * phase;
  return j;
}

}  // namespace

std::array<double, 4> eig_hermitian_oracle(const Matrix4& m,
                                           const JacobiOptions& opts) {
  if (!m.all_finite())
    throw PreconditionError("eig_hermitian_oracle: non-finite entry");
  if (!is_hermitian(m, opts.hermitian_tol))
    throw PreconditionError("eig_hermitian_oracle: input is not Hermitian");

  Matrix4 a = m;
  int sweep = 0;
  while (off_diagonal_norm(a) >= opts.off_diagonal_tol) {
    if (sweep++ >= opts.max_sweeps)
      throw NonConvergence("eig_hermitian_oracle: no convergence after " +
                           std::to_string(opts.max_sweeps) + " sweeps");
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = p + 1; q < 4; ++q) {
        if (std::abs(a(p, q)) == 0.0) continue;
        const Matrix4 j = jacobi_rotation(a, p, q);
        a = j.adjoint() * a * j;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
  }

  std::array<double, 4> ev{};
  for (std::size_t i = 0; i < 4; ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

}  // namespace twoqubit
