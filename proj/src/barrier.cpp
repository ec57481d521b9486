/*
   Copyright 2026 The phasetail authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "phasetail/barrier.hpp"

#include <algorithm>
#include <cmath>

#include "phasetail/specfun.hpp"

namespace phasetail::barrier {

namespace {

// C^1 cubic step: 0 for s <= -1, 1 for s >= 1, 3t^2 - 2t^3 in between.
double smoothstep(double s) {
  if (s <= -1.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double t = 0.5 * (s + 1.0);
  return t * t * (3.0 - 2.0 * t);
}

}  // namespace

double PotentialProfile::operator()(double x) const {
  if (kind == Kind::square) return (x >= b && x <= c) ? V0 : 0.0;
  return V0 * smoothstep((x - b) / w) * smoothstep((c - x) / w);
}

PotentialProfile square_profile(double V0, double b, double c) {
  if (V0 < 0.0) throw std::invalid_argument("square_profile: V0 must be >= 0");
  if (!(c > b)) throw std::invalid_argument("square_profile: need c > b");
  return {PotentialProfile::Kind::square, V0, b, c, 0.0};
}

PotentialProfile smooth_profile(double V0, double b, double c, double w) {
  if (V0 < 0.0) throw std::invalid_argument("smooth_profile: V0 must be >= 0");
  if (!(c > b)) throw std::invalid_argument("smooth_profile: need c > b");
  if (!(w > 0.0))
    throw std::invalid_argument(
        "smooth_profile: w must be > 0 (the square profile is a separate, "
        "inadmissible constructor)");
  return {PotentialProfile::Kind::smooth, V0, b, c, w};
}

namespace {

// Transfer across one slice of constant potential in the (psi, psi') basis:
//   [[cw, dx sw], [(q2 dx) sw, cw]]  with q2 = 2m(E-V)/hbar^2 (signed),
// where cw/sw continue cos(k dx), sin(k dx)/(k dx) through k^2 <= 0
// (cosh/sinh for evanescent slices, series at the turning value).  scale
// returns log of a factor already divided out, so entries stay bounded for
// arbitrarily thick evanescent slices.
struct SliceMatrix {
  double m11, m12, m21, m22;
  double log_scale;
};

SliceMatrix slice_matrix(double q2, double dx) {
  const double w = q2 * dx * dx;
  double cw, sw, log_scale = 0.0;
  if (w >= 1e-6) {
    const double rt = std::sqrt(w);
    cw = std::cos(rt);
    sw = std::sin(rt) / rt;
  } else if (w <= -1e-6) {
    const double rt = std::sqrt(-w);
    if (rt > 350.0) {
      // cosh/sinh ~ e^rt/2: divide e^{rt} out before it overflows
      log_scale = rt;
      const double em = std::exp(-2.0 * rt);
      cw = 0.5 * (1.0 + em);
      sw = 0.5 * (1.0 - em) / rt;
    } else {
      cw = std::cosh(rt);
      sw = std::sinh(rt) / rt;
    }
  } else {
    cw = 1.0 + w * (-0.5 + w * (1.0 / 24.0 - w / 720.0));
    sw = 1.0 + w * (-1.0 / 6.0 + w * (1.0 / 120.0 - w / 5040.0));
  }
  return {cw, dx * sw, -(q2 * dx) * sw, cw, log_scale};
}

struct TotalMatrix {
  double m11 = 1.0, m12 = 0.0, m21 = 0.0, m22 = 1.0;
  double log_scale = 0.0;

  void multiply_left(const SliceMatrix& s) {
    const double a11 = s.m11 * m11 + s.m12 * m21;
    const double a12 = s.m11 * m12 + s.m12 * m22;
    const double a21 = s.m21 * m11 + s.m22 * m21;
    const double a22 = s.m21 * m12 + s.m22 * m22;
    m11 = a11;
    m12 = a12;
    m21 = a21;
    m22 = a22;
    log_scale += s.log_scale;
    const double big = std::max(std::max(std::fabs(m11), std::fabs(m12)),
                                std::max(std::fabs(m21), std::fabs(m22)));
    if (big > 1e200) {
      const double inv = 1.0 / big;
      m11 *= inv;
      m12 *= inv;
      m21 *= inv;
      m22 *= inv;
      log_scale += std::log(big);
    }
  }
};

// Boundary solve against free plane waves of wavenumber k on both sides:
//   P = i k M11 - M21,  Q = k^2 M12 + i k M22,
//   r = (Q - P)/(Q + P),  t = 2 i k det(M)/(P + Q),  det(M) = 1.
ScatteringResult solve_boundaries(const TotalMatrix& M, double E, double k) {
  const std::complex<double> ik(0.0, k);
  const std::complex<double> P = ik * M.m11 - M.m21;
  const std::complex<double> Q = k * k * M.m12 + ik * M.m22;
  const std::complex<double> r = (Q - P) / (Q + P);

  ScatteringResult res;
  res.energy = E;
  res.R = std::norm(r);
  std::complex<double> t;
  if (M.log_scale == 0.0) {
    t = 2.0 * ik / (P + Q);
    res.T = std::norm(t);
  } else {
    const double log_t = std::log(2.0 * k) - M.log_scale - std::log(std::abs(P + Q));
    res.T = std::exp(2.0 * log_t);
    t = std::polar(std::exp(log_t), std::arg(2.0 * ik / (P + Q)));
  }
  res.regions.push_back({{1.0, 0.0}, r, {k, 0.0}});
  res.regions.push_back({t, {0.0, 0.0}, {k, 0.0}});
  return res;
}

void validate_scatter_inputs(double E, double m, double hbar) {
  if (!(E > 0.0) || !std::isfinite(E))
    throw std::invalid_argument("scattering: E must be positive");
  if (!(m > 0.0) || !(hbar > 0.0))
    throw std::invalid_argument("scattering: m and hbar must be positive");
}

}  // namespace

ScatteringResult square_transmission(double V0, double b, double c, double E,
                                     double m, double hbar) {
  validate_scatter_inputs(E, m, hbar);
  if (V0 < 0.0) throw std::invalid_argument("square_transmission: V0 must be >= 0");
  if (!(c > b)) throw std::invalid_argument("square_transmission: need c > b");

  const double a = c - b;
  const double k = std::sqrt(2.0 * m * E) / hbar;

  ScatteringResult res;
  res.energy = E;

  // textbook closed forms for T; beta = R/T
  double beta;
  if (V0 == 0.0) {
    beta = 0.0;
  } else if (E == V0) {
    beta = m * V0 * a * a / (2.0 * hbar * hbar);
  } else if (E > V0) {
    const double k2 = std::sqrt(2.0 * m * (E - V0)) / hbar;
    const double s = std::sin(k2 * a);
    beta = V0 * V0 * s * s / (4.0 * E * (E - V0));
  } else {
    const double kappa = std::sqrt(2.0 * m * (V0 - E)) / hbar;
    const double s = std::sinh(kappa * a);
    beta = V0 * V0 * s * s / (4.0 * E * (V0 - E));
  }
  if (std::isinf(beta)) {
    res.T = 0.0;
    res.R = 1.0;
  } else {
    res.T = 1.0 / (1.0 + beta);
    res.R = beta / (1.0 + beta);
  }

  // region amplitudes from the one-slice matrix solve (phases referenced to
  // each region's left edge)
  const double q2 = 2.0 * m * (E - V0) / (hbar * hbar);
  TotalMatrix M;
  M.multiply_left(slice_matrix(q2, a));
  const auto amps = solve_boundaries(M, E, k);
  const std::complex<double> r = amps.regions[0].B;
  const std::complex<double> t = amps.regions[1].A;

  res.regions.resize(3);
  res.regions[0] = {{1.0, 0.0}, r, {k, 0.0}};
  const std::complex<double> psi = 1.0 + r;
  const std::complex<double> dpsi = std::complex<double>(0.0, k) * (1.0 - r);
  if (q2 != 0.0) {
    const std::complex<double> kin =
        q2 > 0.0 ? std::complex<double>(std::sqrt(q2), 0.0)
                 : std::complex<double>(0.0, std::sqrt(-q2));
    const std::complex<double> ikin(0.0, 1.0);
    res.regions[1] = {0.5 * (psi + dpsi / (ikin * kin)),
                      0.5 * (psi - dpsi / (ikin * kin)), kin};
  } else {
    res.regions[1] = {0.5 * psi, 0.5 * psi, {0.0, 0.0}};
  }
  res.regions[2] = {t, {0.0, 0.0}, {k, 0.0}};
  return res;
}

ScatteringResult transfer_matrix(const PotentialProfile& profile, double E,
                                 double m, double hbar, std::size_t slices) {
  validate_scatter_inputs(E, m, hbar);
  if (slices < 1) throw std::invalid_argument("transfer_matrix: slices >= 1");

  const double lo = profile.support_lo();
  const double hi = profile.support_hi();
  const double dx = (hi - lo) / double(slices);
  const double pref = 2.0 * m / (hbar * hbar);

  TotalMatrix M;
  for (std::size_t j = 0; j < slices; ++j) {
    const double xm = lo + (double(j) + 0.5) * dx;
    M.multiply_left(slice_matrix(pref * (E - profile(xm)), dx));
  }
  return solve_boundaries(M, E, std::sqrt(2.0 * m * E) / hbar);
}

ConvergedTransmission converged_transmission(const PotentialProfile& profile,
                                             double E, double m, double hbar,
                                             const Tolerances& tol) {
  std::size_t slices = 64;
  double prev = transfer_matrix(profile, E, m, hbar, slices).T;
  while (slices < tol.transfer_slice_cap) {
    slices *= 2;
    const double cur = transfer_matrix(profile, E, m, hbar, slices).T;
    const double delta = std::fabs(cur - prev);
    if (delta <= tol.transfer_tol) {
      // midpoint sampling converges as O(dx^2): one Richardson step
      const double extrap = std::clamp(cur + (cur - prev) / 3.0, 0.0, 1.0);
      return {extrap, 1.0 - extrap, slices, delta};
    }
    prev = cur;
  }
  throw NonConvergence("transfer matrix: T still moving by more than " +
                       std::to_string(tol.transfer_tol) + " at the slice cap");
}

double classical_overbarrier_fraction(const phasespace::PhaseSpaceGaussian& F,
                                      double V0, double m) {
  if (!(V0 > 0.0) || !std::isfinite(V0))
    throw std::invalid_argument("classical_overbarrier_fraction: V0 must be positive");
  if (!(m > 0.0))
    throw std::invalid_argument("classical_overbarrier_fraction: m must be positive");
  const double p_thr = std::sqrt(2.0 * m * V0);
  const double arg =
      double((long double)p_thr / (std::sqrt(2.0L) * (long double)F.sigma_p));
  return specfun::gaussian_tail(arg);
}

}  // namespace phasetail::barrier
