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
#include <cmath>
#include <complex>
#include <cstddef>

#include "twoqubit/errors.hpp"

namespace twoqubit {

using Complex = std::complex<double>;

/// Dense N×N complex matrix with value semantics, row-major storage.
template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr SquareMatrix() : data_{} {}

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix diagonal(const std::array<double, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  /// Outer product |v⟩⟨v|.
  static SquareMatrix projector(const std::array<Complex, N>& v) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * N + c];
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  SquareMatrix adjoint() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  SquareMatrix transpose() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = (*this)(j, i);
    return m;
  }

  /// Entrywise complex conjugate.
  SquareMatrix conj() const {
    SquareMatrix m;
    for (std::size_t k = 0; k < N * N; ++k) m.data_[k] = std::conj(data_[k]);
    return m;
  }

  /// Largest entrywise modulus.
  double max_abs() const {
    double best = 0.0;
    for (const auto& z : data_) best = std::max(best, std::abs(z));
    return best;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  bool all_finite() const {
    for (const auto& z : data_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  /// Entrywise comparison with an explicit absolute tolerance.
  bool approx_equal(const SquareMatrix& other, double tol) const {
    for (std::size_t k = 0; k < N * N; ++k)
      if (std::abs(data_[k] - other.data_[k]) > tol) return false;
    return true;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
  friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend std::array<Complex, N> operator*(const SquareMatrix& a,
                                          const std::array<Complex, N>& v) {
    std::array<Complex, N> out{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

 private:
  std::array<Complex, N * N> data_;
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;

/// Pauli matrix σ_mu: σ0 = I, σ1 = σx, σ2 = σy, σ3 = σz.
/// Throws PreconditionError for mu > 3.
Matrix2 pauli(int mu);

/// Kronecker product with the block convention
/// (p⊗q)(N2*i + k, N2*j + l) = p(i, j) q(k, l).
template <std::size_t N1, std::size_t N2>
SquareMatrix<N1 * N2> kron(const SquareMatrix<N1>& p, const SquareMatrix<N2>& q) {
  SquareMatrix<N1 * N2> m;
  for (std::size_t i = 0; i < N1; ++i)
    for (std::size_t j = 0; j < N1; ++j)
      for (std::size_t k = 0; k < N2; ++k)
        for (std::size_t l = 0; l < N2; ++l)
          m(N2 * i + k, N2 * j + l) = p(i, j) * q(k, l);
  return m;
}

/// Kronecker product of state vectors, same index convention as kron.
template <std::size_t N1, std::size_t N2>
std::array<Complex, N1 * N2> kron(const std::array<Complex, N1>& u,
                                  const std::array<Complex, N2>& v) {
  std::array<Complex, N1 * N2> out{};
  for (std::size_t i = 0; i < N1; ++i)
    for (std::size_t k = 0; k < N2; ++k) out[N2 * i + k] = u[i] * v[k];
  return out;
}

/// True iff max |m(i,j) − conj(m(j,i))| ≤ tol.
bool is_hermitian(const Matrix4& m, double tol);

/// Tr(m^k) for k in 1..4 by repeated multiplication.
Complex trace_power(const Matrix4& m, int k);

}  // namespace twoqubit
