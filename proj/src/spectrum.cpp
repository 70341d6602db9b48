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

#include "twoqubit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "detail/vec3.hpp"
#include "twoqubit/errors.hpp"
#include "twoqubit/oracle.hpp"

namespace twoqubit {

namespace {

using std::numbers::sqrt3;
const double kSqrt6 = std::sqrt(6.0);

// Candidates whose worst relative residual is below this are exact up to
// rounding of the coefficients.
constexpr double kResidualNoiseFloor = 1e-13;
// Σx² = −2p can only be negative through rounding.
constexpr double kPositiveTraceSlack = 1e-12;

CenteredCoeffs centered_from_flv(const Matrix4& m) {
  Matrix4 t = m;
  const Complex shift = m.trace() / 4.0;
  for (std::size_t i = 0; i < 4; ++i) t(i, i) -= shift;
  const MonicQuartic k = charpoly_flv(t);
  return {k.c2, k.c1, k.c0};
}

CharCoeffs from_flv(const Matrix4& m) {
  const MonicQuartic k = charpoly_flv(m);
  CharCoeffs c;
  c.b0 = k.c0;
  c.b1 = k.c1;
  c.b2 = k.c2;
  c.tr2 = trace_power(m, 2).real();
  c.centered = centered_from_flv(m);
  return c;
}

// Worst |f(x)| / (x⁴ + |p|x² + |q||x| + |r|) over the candidate roots of
// f(x) = x⁴ + p x² + q x + r.
double relative_residual(const CenteredCoeffs& k, std::span<const double> xs) {
  double worst = 0.0;
  for (double x : xs) {
    const double x2 = x * x;
    const double f = (x2 + k.p) * x2 + k.q * x + k.r;
    const double scale =
        x2 * x2 + std::abs(k.p) * x2 + std::abs(k.q * x) + std::abs(k.r);
    if (f == 0.0) continue;
    if (!(scale > 0.0)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::abs(f) / scale);
  }
  return std::isnan(worst) ? std::numeric_limits<double>::infinity() : worst;
}

template <std::size_t N>
struct Candidate {
  std::array<double, N> values{};
  Branch branch{};
  double residual = std::numeric_limits<double>::infinity();
};

// The designated candidate wins when it is exact to rounding; otherwise the
// lowest residual wins.
template <std::size_t N>
const Candidate<N>& select(const std::vector<Candidate<N>>& cands,
                           std::optional<Branch> designated) {
  if (designated) {
    for (const auto& c : cands)
      if (c.branch == *designated && c.residual <= kResidualNoiseFloor) return c;
  }
  const auto it = std::min_element(
      cands.begin(), cands.end(),
      [](const auto& a, const auto& b) { return a.residual < b.residual; });
  if (it == cands.end() || !std::isfinite(it->residual))
    throw InternalInconsistency("no finite closed-form candidate");
  return *it;
}

double clamp_radicand(double v, double scale, double tol, const char* what) {
  if (v >= 0.0) return v;
  if (v >= -tol * scale) return 0.0;
  throw InternalInconsistency(std::string("negative radicand in ") + what);
}

// Offsets x = λ − 1/4 from the four λ^±(∓) expressions, given the value of
// c1·cos φ. The C2Zero branch passes zero.
std::array<double, 4> trig_root_offsets(double p, double q, double c1cos,
                                          double radicand_tol) {
  const double s = -8.0 * p;  // 4 Tr Ω² − 1
  const double big_q = 8.0 * q;  // 1 + 8b1 − 2 Tr Ω²
  const double rr = std::sqrt(
      clamp_radicand(s + 8.0 * c1cos, s, radicand_tol, "resolvent"));
  if (!(rr > 0.0)) throw InternalInconsistency("vanishing resolvent root");
  const double common = s - 4.0 * c1cos;
  const double shift = 3.0 * sqrt3 * big_q / rr;
  const double inner_minus =
      std::sqrt(clamp_radicand(common + shift, s, radicand_tol, "λ(−)"));
  const double inner_plus =
      std::sqrt(clamp_radicand(common - shift, s, radicand_tol, "λ(+)"));
  const double outer = rr / (4.0 * sqrt3);
  return {-outer + inner_minus / (2.0 * kSqrt6),
          -outer - inner_minus / (2.0 * kSqrt6),
          outer + inner_plus / (2.0 * kSqrt6),
          outer - inner_plus / (2.0 * kSqrt6)};
}

template <std::size_t N>
std::array<double, N> sorted_descending(std::array<double, N> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

void check_residual(const CharCoeffs& c, std::span<const double> lambdas,
                    double tol) {
  for (double l : lambdas) {
    const double res = c(l);
    if (!(std::abs(res) <= tol))
      throw InternalInconsistency("closed-form root misses the polynomial by " +
                                  std::to_string(res));
  }
}

// Λ± for a trace-one pair, without the positivity bound of rank2_eigs.
std::array<double, 2> pair_from_purity(double tr2, double radicand_tol) {
  const double disc =
      std::sqrt(clamp_radicand(2.0 * tr2 - 1.0, 1.0, radicand_tol, "rank two"));
  return {(1.0 + disc) / 2.0, (1.0 - disc) / 2.0};
}

}  // namespace

CharCoeffs CharCoeffs::from_b(double b0, double b1, double b2, double tr2) {
  CharCoeffs c{b0, b1, b2, tr2, {}};
  c.centered.p = b2 - 3.0 / 8.0;
  c.centered.q = b1 + b2 / 2.0 - 1.0 / 8.0;
  c.centered.r = b0 + b1 / 4.0 + b2 / 16.0 - 3.0 / 256.0;
  return c;
}

double CharCoeffs::operator()(double l) const {
  return (((l - 1.0) * l + b2) * l + b1) * l + b0;
}

CharCoeffs coeffs_from_traces(const Matrix4& m, double tol) {
  if (!m.all_finite()) throw PreconditionError("matrix has non-finite entries");
  if (!is_hermitian(m, tol)) throw PreconditionError("matrix is not Hermitian");
  if (std::abs(m.trace() - 1.0) > tol)
    throw PreconditionError("matrix trace differs from one");
  return from_flv(m);
}

CharCoeffs coeffs_from_matrix(const Matrix4& m) { return from_flv(m); }

CharCoeffs coeffs_from_bloch(const BlochTensor& t) {
  using detail::dot;
  using detail::mul;
  const detail::BlochInvariants s = detail::invariants(t);
  const Mat3& a = s.a;
  const double tr_a = detail::trace(a);
  const double tr_a2 = detail::trace(detail::mul(a, a));
  const Vec3 at_xa = mul(detail::transpose(a), s.xi_a);
  const Vec3 a_xb = mul(a, s.xi_b);
  const double xa2 = dot(s.xi_a, s.xi_a);
  const double xb2 = dot(s.xi_b, s.xi_b);
  const double xb_a2_xa = dot(s.xi_b, mul(detail::mul(a, a), s.xi_a));
  const double xb_a_xa = dot(s.xi_b, mul(a, s.xi_a));

  CharCoeffs c;
  c.tr2 = t.purity();
  c.b2 = 0.5 * (1.0 - c.tr2);
  c.b1 = (2.0 * c.tr2 - 1.0 - s.xa_a_xb + s.det_a) / 8.0;
  c.b0 = (1.0 - xa2 * xb2 - dot(at_xa, at_xa) - dot(a_xb, a_xb) +
          2.0 * s.xa_a_xb + (tr_a * tr_a - tr_a2) * dot(s.xi_a, s.xi_b) +
          2.0 * xb_a2_xa - 2.0 * tr_a * xb_a_xa - s.minors_sq - 2.0 * s.det_a) /
             64.0 -
         (c.tr2 - c.tr2 * c.tr2) / 16.0;

  // Homogeneous forms of the same polynomial about 1/4.
  const double sq = s.traceless_sq;
  c.centered.p = -sq / 8.0;
  c.centered.q = (s.det_a - s.xa_a_xb) / 8.0;
  c.centered.r = (sq * sq / 4.0 - xa2 * xb2 - dot(at_xa, at_xa) -
                  dot(a_xb, a_xb) + 2.0 * s.xb_adj_xa - s.minors_sq) /
                 64.0;
  return c;
}

double c1_squared_from_b(const CharCoeffs& c) {
  return 12.0 * c.b0 + 3.0 * c.b1 + c.b2 * c.b2;
}

double c2_from_b(const CharCoeffs& c) {
  return 27.0 * c.b1 * c.b1 + c.b0 * (27.0 - 72.0 * c.b2) +
         9.0 * c.b1 * c.b2 + 2.0 * c.b2 * c.b2 * c.b2;
}

TrigParams trig_params(const CharCoeffs& c, const SolverOptions& opt) {
  const auto [p, q, r] = c.centered;
  const double c1_scale = p * p + 12.0 * std::abs(r);
  TrigParams t;
  t.c1 = std::sqrt(
      clamp_radicand(p * p + 12.0 * r, c1_scale, opt.radicand, "c1"));
  t.c2 = 2.0 * p * p * p - 72.0 * p * r + 27.0 * q * q;
  const double c2_scale =
      2.0 * std::abs(p * p * p) + 72.0 * std::abs(p * r) + 27.0 * q * q;
  const double c1_cubed = t.c1 * t.c1 * t.c1;
  const double disc = t.c2 * t.c2 - 4.0 * c1_cubed * c1_cubed;
  if (disc > opt.radicand * (c2_scale * c2_scale + 4.0 * c1_scale * c1_scale * c1_scale))
    throw InternalInconsistency("positive quartic discriminant: complex spectrum");
  t.degenerate = t.c1 <= opt.triple_band * std::abs(p);
  if (!t.degenerate) {
    const double ratio = std::clamp(t.c2 / (2.0 * c1_cubed), -1.0, 1.0);
    t.phi = std::acos(ratio) / 3.0;
  }
  return t;
}

double phi_via_cube_root(double c1, double c2) {
  const std::complex<double> root =
      std::sqrt(std::complex<double>(c2 * c2 - 4.0 * std::pow(c1, 6), 0.0));
  return std::arg(std::pow(c2 + root, 1.0 / 3.0));
}

double cos_phi_via_cube_root(double c1, double c2) {
  const std::complex<double> root =
      std::sqrt(std::complex<double>(c2 * c2 - 4.0 * std::pow(c1, 6), 0.0));
  const std::complex<double> w = std::pow(c2 + root, 1.0 / 3.0);
  const std::complex<double> v =
      c1 / (std::cbrt(4.0) * w) + w / (2.0 * std::cbrt(2.0) * c1);
  return v.real();
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Generic: return "Generic";
    case Branch::C2Zero: return "C2Zero";
    case Branch::DoubleZeroCase1: return "DoubleZeroCase1";
    case Branch::DoubleZeroCase2: return "DoubleZeroCase2";
    case Branch::AllQuarter: return "AllQuarter";
    case Branch::RankTwo: return "RankTwo";
    case Branch::Cubic: return "Cubic";
    case Branch::CubicD0: return "CubicD0";
    case Branch::CubicAllThird: return "CubicAllThird";
    case Branch::PurePartialTranspose: return "PurePartialTranspose";
  }
  return "Unknown";
}

QuarticSpectrum quartic_eigs(const CharCoeffs& c, const SolverOptions& opt) {
  const auto [p, q, r] = c.centered;
  if (p > kPositiveTraceSlack)
    throw InternalInconsistency("Tr Ω² below 1/4: complex spectrum");
  const double s = std::max(-8.0 * p, 0.0);  // 4 Tr Ω² − 1

  QuarticSpectrum out;
  if (std::sqrt(s / 4.0) <= opt.quarter_spread) {
    out.lambdas = {0.25, 0.25, 0.25, 0.25};
    out.branch = Branch::AllQuarter;
    check_residual(c, out.lambdas, opt.residual);
    return out;
  }

  const TrigParams t = trig_params(c, opt);
  std::vector<Candidate<4>> cands;
  auto add = [&](Branch b, const std::array<double, 4>& x) {
    cands.push_back({x, b, relative_residual(c.centered, x)});
  };
  auto try_add = [&](Branch b, auto&& make) {
    try {
      add(b, make());
    } catch (const InternalInconsistency&) {
      // A clamped-out radicand only disqualifies this candidate.
    }
  };

  std::optional<Branch> designated;
  if (t.degenerate) {
    const double k = std::sqrt(s) / (4.0 * sqrt3);
    add(Branch::DoubleZeroCase1, {-k, -k, -k, 3.0 * k});
    add(Branch::DoubleZeroCase2, {k, k, k, -3.0 * k});
    designated = q <= 0.0 ? Branch::DoubleZeroCase1 : Branch::DoubleZeroCase2;
  }
  const bool c2_band =
      !t.degenerate && std::abs(t.c2) <= opt.branch * 2.0 * t.c1 * t.c1 * t.c1;
  if (c2_band || t.degenerate) {
    try_add(Branch::C2Zero,
            [&] { return trig_root_offsets(p, q, 0.0, opt.radicand); });
    if (c2_band) designated = Branch::C2Zero;
  }
  if (t.c1 > 0.0) {
    const double ratio =
        std::clamp(t.c2 / (2.0 * t.c1 * t.c1 * t.c1), -1.0, 1.0);
    const double phi = t.degenerate ? std::acos(ratio) / 3.0 : t.phi;
    try_add(Branch::Generic, [&] {
      return trig_root_offsets(p, q, t.c1 * std::cos(phi), opt.radicand);
    });
  }

  const Candidate<4>& best = select(cands, designated);
  for (std::size_t i = 0; i < 4; ++i) out.lambdas[i] = 0.25 + best.values[i];
  out.lambdas = sorted_descending(out.lambdas);
  out.branch = best.branch;
  check_residual(c, out.lambdas, opt.residual);
  return out;
}

CubicCoeffs CubicCoeffs::from(const CharCoeffs& c) {
  return {c.b1, c.b2, c.tr2, 2.0 - 27.0 * c.b1 - 9.0 * c.b2};
}

CubicSpectrum cubic_eigs(const CubicCoeffs& c, const SolverOptions& opt) {
  if (!(c.tr2 >= 1.0 / 3.0 - 1e-10))
    throw PreconditionError("cubic solver needs Tr Ω² ≥ 1/3");
  const double w = std::max((3.0 * c.tr2 - 1.0) / 2.0, 0.0);  // 1 − 3b2
  const double amp = std::sqrt(std::max(6.0 * c.tr2 - 2.0, 0.0));
  constexpr double third = 1.0 / 3.0;
  constexpr double pi = std::numbers::pi;

  auto residual = [&](const std::array<double, 3>& ls) {
    double worst = 0.0;
    for (double l : ls) {
      const double g = ((l - 1.0) * l + c.b2) * l + c.b1;
      const double scale = std::abs(l * l * l) + l * l +
                           std::abs(c.b2 * l) + std::abs(c.b1);
      if (g == 0.0) continue;
      if (!(scale > 0.0)) return std::numeric_limits<double>::infinity();
      worst = std::max(worst, std::abs(g) / scale);
    }
    return worst;
  };

  std::vector<Candidate<3>> cands;
  auto add = [&](Branch b, const std::array<double, 3>& ls) {
    cands.push_back({ls, b, residual(ls)});
  };
  std::optional<Branch> designated;
  if (std::abs(c.tr2 - third) <= opt.branch) {
    add(Branch::CubicAllThird, {third, third, third});
    designated = Branch::CubicAllThird;
  }
  if (std::abs(c.d) <= opt.branch) {
    const double half = std::sqrt(1.5) * std::sqrt(std::max(3.0 * c.tr2 - 1.0, 0.0));
    add(Branch::CubicD0, {(1.0 + half) / 3.0, third, (1.0 - half) / 3.0});
    if (!designated) designated = Branch::CubicD0;
  }
  if (w > 0.0) {
    const double ratio =
        std::clamp(c.d / (2.0 * w * std::sqrt(w)), -1.0, 1.0);
    const double phi = std::acos(ratio) / 3.0;
    add(Branch::Cubic, {(1.0 + amp * std::cos(phi)) / 3.0,
                        (1.0 - amp * std::cos(phi - pi / 3.0)) / 3.0,
                        (1.0 - amp * std::cos(phi + pi / 3.0)) / 3.0});
  }
  if (cands.empty()) add(Branch::CubicAllThird, {third, third, third});

  const Candidate<3>& best = select(cands, designated);
  return {sorted_descending(best.values), best.branch};
}

std::array<double, 2> rank2_eigs(double tr2) {
  if (!(tr2 >= 0.5 - 1e-10 && tr2 <= 1.0 + 1e-10))
    throw PreconditionError("rank-two purity must lie in [1/2, 1]");
  return pair_from_purity(std::min(tr2, 1.0), 1.0);
}

bool purity_bound_check(std::span<const double> lambdas, int m) {
  if (m < 1 || m > 4) throw PreconditionError("m must lie in 1..4");
  double sum_sq = 0.0;
  bool nonnegative = true;
  for (double l : lambdas) {
    sum_sq += l * l;
    nonnegative = nonnegative && l >= 0.0;
  }
  if (sum_sq < 1.0 / m - 1e-10) return false;
  return !nonnegative || sum_sq <= 1.0 + 1e-10;
}

QuarticSpectrum eigenvalues(const CharCoeffs& c, const SolverOptions& opt) {
  const auto negligible = [&](double v, double ref, double rel) {
    return std::abs(v) <= opt.coefficient_noise || std::abs(v) <= rel * std::abs(ref);
  };
  const bool two_zeros = negligible(c.b1, c.b2, opt.zero) &&
                         negligible(c.b0, c.b2, opt.zero * opt.zero);
  const bool one_zero = !two_zeros && std::abs(c.b0) <= opt.zero * std::abs(c.b1);

  QuarticSpectrum out;
  if (two_zeros) {
    const auto pair = pair_from_purity(c.tr2, opt.radicand);
    out.lambdas = sorted_descending(std::array{pair[0], pair[1], 0.0, 0.0});
    out.branch = Branch::RankTwo;
  } else if (one_zero) {
    const CubicSpectrum cs = cubic_eigs(CubicCoeffs::from(c), opt);
    out.lambdas = sorted_descending(
        std::array{cs.lambdas[0], cs.lambdas[1], cs.lambdas[2], 0.0});
    out.branch = cs.branch;
  } else {
    return quartic_eigs(c, opt);
  }
  check_residual(c, out.lambdas, opt.residual);
  return out;
}

}  // namespace twoqubit
