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

#include "twoqubit/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "twoqubit/errors.hpp"
#include "twoqubit/spectrum.hpp"

namespace twoqubit {

namespace {

constexpr double kFlipNegative = 1e-8;
constexpr double kFlipVanishingTrace = std::numeric_limits<double>::min();
// Pivots below this fraction of the largest diagonal entry end the
// factorization.
constexpr double kFactorRankCut = 1e-14;
constexpr int kNewtonLimit = 200;
// Above this value of 4 Tr N² − 1 (N = τ†τ normalized) the spectrum comes
// from the minor sums; below it all eigenvalues exceed 0.09 and the
// traceless-part recursion is the accurate one.
constexpr double kSpreadSwitch = 0.1;

struct PsdFactor {
  // Columns w_k with m ≈ Σ w_k w_k†.
  std::vector<std::array<Complex, 4>> cols;
  // Product of the pivots, i.e. det m when all four columns are present.
  double det = 0.0;
};

PsdFactor psd_factor(const Matrix4& m) {
  Matrix4 a = m;
  double scale = 0.0;
  for (std::size_t i = 0; i < 4; ++i) scale = std::max(scale, a(i, i).real());
  PsdFactor f;
  f.det = 1.0;
  for (int step = 0; step < 4; ++step) {
    std::size_t piv = 0;
    for (std::size_t i = 1; i < 4; ++i)
      if (a(i, i).real() > a(piv, piv).real()) piv = i;
    const double d = a(piv, piv).real();
    if (d <= kFactorRankCut * scale) break;
    std::array<Complex, 4> w{};
    for (std::size_t i = 0; i < 4; ++i) w[i] = a(i, piv) / std::sqrt(d);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) -= w[i] * std::conj(w[j]);
    f.cols.push_back(w);
    f.det *= d;
  }
  if (f.cols.size() < 4) f.det = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    if (a(i, i).real() < -tolerance::kPsd)
      throw PreconditionError("matrix is not positive semidefinite");
  return f;
}

Complex minor2(const Matrix4& t, std::size_t r0, std::size_t r1, std::size_t c0,
               std::size_t c1) {
  return t(r0, c0) * t(r1, c1) - t(r0, c1) * t(r1, c0);
}

struct FlipData {
  Matrix4 h;  // τ†τ
  std::array<double, 4> e{};
};

// Elementary symmetric functions e1..e4 of the eigenvalues of ρρ̃. With
// ρ = W W† these equal those of τ†τ, τ = Wᵀ Y W, and Cauchy–Binet gives
// e_k as the sum of squared k×k minors of τ. Unlike power sums this keeps
// relative accuracy for tiny eigenvalues.
FlipData flip_invariants(const DensityMatrix& rho) {
  const PsdFactor f = psd_factor(rho.matrix());
  const Matrix4 yy = kron(pauli(2), pauli(2));
  Matrix4 tau;
  for (std::size_t i = 0; i < f.cols.size(); ++i)
    for (std::size_t j = 0; j < f.cols.size(); ++j) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
          s += f.cols[i][a] * yy(a, b) * f.cols[j][b];
      tau(i, j) = s;
    }
  FlipData out;
  out.h = tau.adjoint() * tau;
  auto& e = out.e;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) e[0] += std::norm(tau(i, j));
  for (std::size_t r0 = 0; r0 < 4; ++r0)
    for (std::size_t r1 = r0 + 1; r1 < 4; ++r1)
      for (std::size_t c0 = 0; c0 < 4; ++c0)
        for (std::size_t c1 = c0 + 1; c1 < 4; ++c1)
          e[1] += std::norm(minor2(tau, r0, r1, c0, c1));
  // 3×3 minors: drop row i and column j.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::array<std::size_t, 3> r{}, c{};
      for (std::size_t k = 0, n = 0; k < 4; ++k)
        if (k != i) r[n++] = k;
      for (std::size_t k = 0, n = 0; k < 4; ++k)
        if (k != j) c[n++] = k;
      const Complex m = tau(r[0], c[0]) * minor2(tau, r[1], r[2], c[1], c[2]) -
                        tau(r[0], c[1]) * minor2(tau, r[1], r[2], c[0], c[2]) +
                        tau(r[0], c[2]) * minor2(tau, r[1], r[2], c[0], c[1]);
      e[2] += std::norm(m);
    }
  // |det τ| = |det W|² = det ρ.
  e[3] = f.det * f.det;
  return out;
}

// Coefficients f1, f2, f3 of the cubic left after removing the root mu1,
// built from the constant term up so that small eigenvalues are not lost to
// cancellation.
std::array<double, 3> deflate(const std::array<double, 4>& e, double mu1) {
  const double f3 = e[3] / mu1;
  const double f2 = (e[2] - f3) / mu1;
  const double f1 = (e[1] - f2) / mu1;
  return {f1, f2, f3};
}

std::array<double, 4> flip_eigenvalues(const FlipData& d) {
  const auto& e = d.e;
  const double t = e[0];
  if (t <= kFlipVanishingTrace) return {0.0, 0.0, 0.0, 0.0};
  const double b2 = e[1] / (t * t);
  const double tr2 = 1.0 - 2.0 * b2;
  std::array<double, 4> mu{};
  if (4.0 * tr2 - 1.0 < kSpreadSwitch) {
    const QuarticSpectrum spec = eigenvalues(coeffs_from_matrix(d.h * (1.0 / t)));
    for (std::size_t i = 0; i < 4; ++i) mu[i] = spec.lambdas[i] * t;
  } else {
    // The largest eigenvalue from the quartic; the rest from the deflated
    // cubic scaled to unit trace, which resolves clusters near zero.
    const QuarticSpectrum spec = eigenvalues(
        CharCoeffs::from_b(e[3] / (t * t * t * t), -e[2] / (t * t * t), b2, tr2));
    mu[0] = spec.lambdas[0] * t;
    const auto [f1, f2, f3] = deflate(e, mu[0]);
    if (f1 > 0.0) {
      const double cb2 = f2 / (f1 * f1);
      const double cb1 = -f3 / (f1 * f1 * f1);
      const CubicSpectrum rest = cubic_eigs(
          {cb1, cb2, 1.0 - 2.0 * cb2, 2.0 - 27.0 * cb1 - 9.0 * cb2});
      for (std::size_t i = 0; i < 3; ++i) mu[i + 1] = rest.lambdas[i] * f1;
    }
  }
  for (double& v : mu) {
    if (v < -kFlipNegative * t)
      throw InternalInconsistency("negative eigenvalue of ρρ̃");
    v = std::max(v, 0.0);
  }
  return mu;
}

// √x1 + √x2 + √x3 for the roots of x³ − f1 x² + f2 x − f3. The sum u is
// the largest root of (u² − f1)² − 8√f3 u − 4 f2, which stays simple when
// the x's cluster; Newton from the upper bound √(3 f1) descends onto it.
double sum_sqrt_roots(double f1, double f2, double f3) {
  if (f1 <= 0.0) return 0.0;
  const double w = std::sqrt(std::max(f3, 0.0)) / (f1 * std::sqrt(f1));
  const double k = 1.0 - 4.0 * std::max(f2, 0.0) / (f1 * f1);
  if (w == 0.0) return std::sqrt(f1 + 2.0 * std::sqrt(std::max(f2, 0.0)));
  double y = std::sqrt(3.0);
  for (int it = 0; it < kNewtonLimit; ++it) {
    const double y2 = y * y;
    const double g = (y2 - 2.0) * y2 - 8.0 * w * y + k;
    const double dg = 4.0 * y * (y2 - 1.0) - 8.0 * w;
    if (g <= 0.0 || dg <= 0.0) break;
    const double next = y - g / dg;
    if (!(next < y)) break;
    y = next;
  }
  return std::sqrt(f1) * y;
}

}  // namespace

Matrix4 spin_flip(const DensityMatrix& rho) {
  const Matrix4 yy = kron(pauli(2), pauli(2));
  return yy * rho.matrix().conj() * yy;
}

std::array<double, 4> spin_flip_spectrum(const DensityMatrix& rho) {
  return flip_eigenvalues(flip_invariants(rho));
}

double concurrence(const DensityMatrix& rho) {
  const FlipData d = flip_invariants(rho);
  const auto& e = d.e;
  const auto mu = flip_eigenvalues(d);
  if (mu[0] <= 0.0) return 0.0;
  const auto [f1, f2, f3] = deflate(e, mu[0]);
  const double c = std::sqrt(mu[0]) - sum_sqrt_roots(f1, f2, f3);
  return std::clamp(c, 0.0, 1.0);
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
  if (c <= 0.0) return 0.0;
  const double cc = std::min(c, 1.0);
  return binary_entropy((1.0 + std::sqrt(1.0 - cc * cc)) / 2.0);
}

double eof(const DensityMatrix& rho) {
  return eof_from_concurrence(concurrence(rho));
}

double negativity(const DensityMatrix& rho) {
  const SeparabilityReport rep = peres_test(rho);
  double sum = 0.0;
  for (double l : rep.pt_eigenvalues)
    if (l < 0.0) sum -= l;
  return sum;
}

double eof_upper_bound(const DensityMatrix& rho, double zero_tol) {
  const QuarticSpectrum spec = eigenvalues(coeffs_from_traces(rho.matrix()));
  if (spec.lambdas[3] <= zero_tol)
    throw NotApplicable("the bound needs a full-rank density matrix");
  const SeparabilityReport rep = peres_test(rho);
  return std::clamp(rep.inequality.rhs, 0.0, 1.0);
}

EntanglementReport entanglement_report(const DensityMatrix& rho) {
  EntanglementReport out;
  out.concurrence = concurrence(rho);
  out.eof = eof_from_concurrence(out.concurrence);
  out.negativity = negativity(rho);
  try {
    out.eof_upper_bound = eof_upper_bound(rho);
  } catch (const NotApplicable&) {
    out.eof_upper_bound.reset();
  }
  return out;
}

}  // namespace twoqubit
