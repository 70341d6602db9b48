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

#include "twoqubit/sampling.hpp"

#include <cmath>
#include <numbers>

#include "twoqubit/errors.hpp"

namespace twoqubit {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u1 = 0.0;
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix4 random_ginibre_state(Rng& rng, int rank) {
  if (rank < 1 || rank > 4) throw PreconditionError("rank must lie in 1..4");
  std::array<std::array<Complex, 4>, 4> g{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < rank; ++k) g[i][k] = rng.complex_normal();
  Matrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < rank; ++k) s += g[i][k] * std::conj(g[j][k]);
      m(i, j) = s;
    }
  return m * (1.0 / m.trace().real());
}

Matrix4 random_hermitian_trace_one(Rng& rng) {
  Matrix4 h;
  for (int i = 0; i < 4; ++i) {
    h(i, i) = rng.normal();
    for (int j = i + 1; j < 4; ++j) {
      h(i, j) = rng.complex_normal() / std::sqrt(2.0);
      h(j, i) = std::conj(h(i, j));
    }
  }
  const Complex shift = h.trace() / 4.0;
  for (int i = 0; i < 4; ++i) h(i, i) -= shift;
  const double norm = h.frobenius_norm();
  const double kappa = rng.uniform(0.2, 1.0) * 0.5 / norm;
  Matrix4 m = Matrix4::identity() * 0.25 + h * kappa;
  for (int i = 0; i < 4; ++i) m(i, i) = m(i, i).real();
  return m;
}

PureState random_pure_state(Rng& rng) {
  std::array<Complex, 4> v{};
  for (auto& x : v) x = rng.complex_normal();
  return PureState::normalized(v);
}

std::array<Complex, 2> random_qubit(Rng& rng) {
  std::array<Complex, 2> v{rng.complex_normal(), rng.complex_normal()};
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  return {v[0] / n, v[1] / n};
}

Matrix2 random_su2(Rng& rng) {
  const auto [a, b] = random_qubit(rng);
  Matrix2 u;
  u(0, 0) = a;
  u(0, 1) = -std::conj(b);
  u(1, 0) = b;
  u(1, 1) = std::conj(a);
  return u;
}

Matrix4 random_local_werner(Rng& rng) {
  const double p = rng.uniform();
  const Matrix4 u = kron(random_su2(rng), random_su2(rng));
  return u * werner_state(p).matrix() * u.adjoint();
}

BlochTensor random_bloch_tensor(Rng& rng) {
  BlochTensor::Array a{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) a[mu][nu] = rng.uniform(-1.0, 1.0);
  a[0][0] = 1.0;
  return BlochTensor(a);
}

}  // namespace twoqubit
