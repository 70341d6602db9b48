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

#include "twoqubit/separability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail/vec3.hpp"
#include "twoqubit/errors.hpp"

namespace twoqubit {

namespace {

using std::numbers::sqrt3;

bool coeffs_close(const CharCoeffs& x, const CharCoeffs& y, double tol) {
  return std::abs(x.b0 - y.b0) <= tol && std::abs(x.b1 - y.b1) <= tol &&
         std::abs(x.b2 - y.b2) <= tol && std::abs(x.tr2 - y.tr2) <= tol &&
         std::abs(x.centered.p - y.centered.p) <= tol &&
         std::abs(x.centered.q - y.centered.q) <= tol &&
         std::abs(x.centered.r - y.centered.r) <= tol;
}

SeparabilityReport report_from_spectrum(const CharCoeffs& pt,
                                        const QuarticSpectrum& spec,
                                        const SeparabilityOptions& opt) {
  SeparabilityReport rep;
  rep.pt_coeffs = pt;
  rep.pt_eigenvalues = spec.lambdas;
  rep.branch = spec.branch;
  rep.lambda_min_pt = spec.lambdas[3];
  rep.separable = rep.lambda_min_pt >= -opt.tau_sep;
  rep.marginal = std::abs(rep.lambda_min_pt) <= opt.tau_sep;
  rep.inequality = separability_inequality(pt, opt);
  return rep;
}

// Tr ρ² at or above 1 − this is treated as a pure state; the neglected
// eigenvalues are then below about 1e-13.
constexpr double kRankOnePurity = 1e-13;

// ψ with ρ ≈ ψψ†, read off the column with the largest diagonal entry.
PureState dominant_vector(const Matrix4& m) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (m(i, i).real() > m(k, k).real()) k = i;
  std::array<Complex, 4> v{};
  for (std::size_t i = 0; i < 4; ++i) v[i] = m(i, k);
  return PureState::normalized(v);
}

}  // namespace

CharCoeffs pt_coeffs(const CharCoeffs& c, const BlochTensor& t,
                     double check_tol) {
  if (!coeffs_close(c, coeffs_from_bloch(t), check_tol))
    throw PreconditionError("coefficients do not belong to the Bloch tensor");

  using detail::dot;
  using detail::mul;
  const detail::BlochInvariants s = detail::invariants(t);
  const Mat3 a2 = detail::mul(s.a, s.a);
  const double tr_a = detail::trace(s.a);
  const double bracket =
      (tr_a * tr_a - detail::trace(a2)) * dot(s.xi_a, s.xi_b) +
      2.0 * dot(s.xi_b, mul(a2, s.xi_a)) -
      2.0 * tr_a * dot(s.xi_b, mul(s.a, s.xi_a));

  CharCoeffs pt = c;
  pt.b0 = c.b0 - bracket / 32.0 + s.det_a / 16.0;
  pt.b1 = c.b1 - s.det_a / 4.0;
  pt.centered.q = c.centered.q - s.det_a / 4.0;
  pt.centered.r = c.centered.r - s.xb_adj_xa / 16.0;

  const CharCoeffs direct =
      coeffs_from_matrix(partial_transpose(from_bloch(t)));
  if (!coeffs_close(pt, direct, check_tol))
    throw InternalInconsistency(
        "partial-transpose coefficient map disagrees with the transposed matrix");
  return pt;
}

SeparabilityInequality separability_inequality(const CharCoeffs& pt,
                                               const SeparabilityOptions& opt) {
  SeparabilityInequality out;
  out.branch = quartic_eigs(pt, opt.solver).branch;
  const double s = std::max(4.0 * pt.tr2 - 1.0, 0.0);
  const double big_q = 8.0 * pt.centered.q;  // 1 + 8b1ᴾ − 2 Tr ρ²
  const double bound = 1.0 + 4.0 * opt.tau_sep;

  auto two_term = [&](double c1cos) {
    const double rr = std::sqrt(std::max(s + 8.0 * c1cos, 0.0));
    const double inner = s - 4.0 * c1cos + 3.0 * sqrt3 * big_q / rr;
    return rr / sqrt3 + 2.0 / std::sqrt(6.0) * std::sqrt(std::max(inner, 0.0));
  };

  switch (out.branch) {
    case Branch::Generic: {
      const TrigParams t = trig_params(pt, opt.solver);
      out.rhs = two_term(t.c1 * std::cos(t.phi));
      out.holds = out.rhs <= bound;
      break;
    }
    case Branch::C2Zero:
      out.rhs = two_term(0.0);
      out.holds = out.rhs <= bound;
      break;
    case Branch::DoubleZeroCase1:
      out.rhs = std::sqrt(s) / sqrt3;
      out.holds = true;
      break;
    case Branch::DoubleZeroCase2:
      out.rhs = sqrt3 * std::sqrt(s);
      out.holds = pt.tr2 <= 1.0 / 3.0 + opt.tau_sep;
      break;
    default:
      out.rhs = 0.0;
      out.holds = true;
      break;
  }
  return out;
}

SeparabilityReport peres_test(const DensityMatrix& rho,
                              const SeparabilityOptions& opt) {
  const CharCoeffs c = coeffs_from_traces(rho.matrix());
  const CharCoeffs pt = pt_coeffs(c, to_bloch(rho), opt.coeff_check);
  // The PT polynomial of a pure state is λ⁴ − λ³ + |ad−bc|²λ − |ad−bc|⁴,
  // whose low coefficients drown in rounding for weakly entangled states.
  if (c.tr2 >= 1.0 - kRankOnePurity) {
    const QuarticSpectrum spec{pure_pt_spectrum(dominant_vector(rho.matrix())),
                               Branch::PurePartialTranspose};
    return report_from_spectrum(pt, spec, opt);
  }
  return report_from_spectrum(pt, eigenvalues(pt, opt.solver), opt);
}

std::array<double, 4> pure_pt_spectrum(const PureState& psi) {
  const double det = std::abs(psi.determinant());
  // 1 − 4|ad − bc|² is the squared Bloch vector of qubit A; summing squares
  // avoids the cancellation near maximal entanglement.
  const auto& [a, b, c, d] = psi.amplitudes();
  const double z = std::norm(a) + std::norm(b) - std::norm(c) - std::norm(d);
  const double root = std::sqrt(z * z + 4.0 * std::norm(a * std::conj(c) + b * std::conj(d)));
  std::array<double, 4> out{(1.0 + root) / 2.0, det, (1.0 - root) / 2.0, -det};
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool pure_separable(const PureState& psi, double tau) {
  return std::abs(psi.determinant()) <= tau;
}

bool cubic_min_nonnegative(const CubicCoeffs& c, double tol,
                           const SolverOptions& opt) {
  if (std::abs(c.tr2 - 1.0 / 3.0) <= opt.branch) return true;
  if (std::abs(c.d) <= opt.branch) return c.tr2 <= 5.0 / 9.0 + tol;
  const double w = std::max((3.0 * c.tr2 - 1.0) / 2.0, 0.0);
  const double ratio = std::clamp(c.d / (2.0 * w * std::sqrt(w)), -1.0, 1.0);
  const double phi = std::acos(ratio) / 3.0;
  return std::sqrt(6.0 * c.tr2 - 2.0) *
             std::cos(phi - std::numbers::pi / 3.0) <=
         1.0 + 3.0 * tol;
}

std::optional<SeparabilityReport> rank_shortcut(const DensityMatrix& rho,
                                                const SeparabilityOptions& opt) {
  const CharCoeffs c = coeffs_from_traces(rho.matrix());
  const CharCoeffs pt = pt_coeffs(c, to_bloch(rho), opt.coeff_check);
  const QuarticSpectrum spec = eigenvalues(pt, opt.solver);
  const auto zeros = std::count_if(
      spec.lambdas.begin(), spec.lambdas.end(),
      [&](double l) { return std::abs(l) <= opt.solver.branch; });
  if (zeros == 0) return std::nullopt;

  SeparabilityReport rep = report_from_spectrum(pt, spec, opt);
  rep.separable =
      zeros >= 2 ||
      cubic_min_nonnegative(CubicCoeffs::from(pt), opt.tau_sep, opt.solver);
  return rep;
}

}  // namespace twoqubit
