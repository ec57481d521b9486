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

#include "phasetail/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "phasetail/specfun.hpp"

namespace phasetail::oscillator {

namespace {
constexpr int kMaxN = 128;
constexpr double kPiQuarterInv = 0.75112554446494248286;  // pi^{-1/4}
}  // namespace

OscillatorConfig::OscillatorConfig(double m_, double C_, double hbar_)
    : m(m_), C(C_), hbar(hbar_) {
  if (!(m > 0.0) || !std::isfinite(m))
    throw std::invalid_argument("OscillatorConfig: m must be positive");
  if (!(C > 0.0) || !std::isfinite(C))
    throw std::invalid_argument("OscillatorConfig: C must be positive");
  if (!(hbar > 0.0) || !std::isfinite(hbar))
    throw std::invalid_argument("OscillatorConfig: hbar must be positive");
  omega = C / std::sqrt(m);
  nu = omega / (2.0 * M_PI);
  alpha = C * std::sqrt(m) / hbar;
}

QuantumState::QuantumState(int n_, const OscillatorConfig& config_)
    : n(n_), config(config_) {
  if (n < 0) throw std::invalid_argument("QuantumState: n must be >= 0");
  if (n > kMaxN)
    throw std::invalid_argument("QuantumState: n capped at 128");
}

double energy(int n, const OscillatorConfig& config) {
  if (n < 0) throw std::invalid_argument("energy: n must be >= 0");
  const double h = 2.0 * M_PI * config.hbar;
  return (n + 0.5) * h * config.nu;
}

namespace {

// Orthonormal Hermite function h_n(xi) = H_n(xi) e^{-xi^2/2} / sqrt(2^n n! sqrt(pi)),
// so that psi_n(x) = alpha^{1/4} h_n(sqrt(alpha) x).  The scaled recurrence
// keeps every intermediate O(1); no factorials appear.
double hermite_function(int n, double xi) {
  double hm = 0.0;
  double h = kPiQuarterInv * std::exp(-0.5 * xi * xi);
  for (int k = 0; k < n; ++k) {
    const double hp =
        xi * std::sqrt(2.0 / (k + 1)) * h - std::sqrt(double(k) / (k + 1)) * hm;
    hm = h;
    h = hp;
  }
  return h;
}

}  // namespace

double eigenfunction(const QuantumState& state, double x) {
  if (!std::isfinite(x))
    throw std::invalid_argument("eigenfunction: x must be finite");
  const double alpha = state.config.alpha;
  return std::pow(alpha, 0.25) * hermite_function(state.n, std::sqrt(alpha) * x);
}

double density(const QuantumState& state, double x) {
  const double psi = eigenfunction(state, x);
  return psi * psi;
}

TurningPoints turning_points(double H0, const OscillatorConfig& config) {
  if (!(H0 > 0.0) || !std::isfinite(H0))
    throw std::invalid_argument("turning_points: H0 must be positive");
  TurningPoints tp;
  tp.H0 = H0;
  tp.x_ret = std::sqrt(2.0 * H0) / config.C;
  tp.p0 = std::sqrt(2.0 * config.m * H0);
  return tp;
}

double paper_h0(const OscillatorConfig& config) {
  return config.hbar * config.C / std::sqrt(config.m);
}

namespace {

// Upper bound on the two-sided tail mass of |psi_n|^2 beyond xi (in scaled
// units xi = sqrt(alpha) x), from |H_n(t)| <= (2t)^n e^{n^2/(4t^2)} for
// t >= sqrt(n) and a first-order bound on the remaining integral.
double tail_remainder_bound(int n, double xi) {
  if (xi * xi <= 2.0 * n + 1.0) return 1.0;
  const double log_density =
      n * std::log(2.0) + 2.0 * n * std::log(xi) + n * n / (2.0 * xi * xi) -
      xi * xi - std::lgamma(n + 1.0) - 0.5 * std::log(M_PI);
  const double decay = 2.0 * xi - 2.0 * n / xi;
  const double log_bound = log_density - std::log(decay);
  return log_bound < -730.0 ? 0.0 : 2.0 * std::exp(log_bound);
}

}  // namespace

double quantum_tail_probability(const QuantumState& state, double x_ret,
                                const Tolerances& tol) {
  if (!(x_ret > 0.0) || !std::isfinite(x_ret))
    throw std::invalid_argument("quantum_tail_probability: x_ret must be positive");
  const double alpha = state.config.alpha;

  if (state.n == 0) {
    // closed form: pr = 1 - erf(sqrt(alpha) x_ret); the argument is formed
    // in extended precision so that the equivalence identity against the
    // classical tail holds to well below 1e-12 for any parameters
    const double arg =
        double(std::sqrt((long double)alpha) * (long double)x_ret);
    return specfun::gaussian_tail(arg);
  }

  // xi units: integrate h_n(xi)^2 from xi_ret out to where the analytic
  // bound certifies the remainder is negligible
  const double xi_ret = std::sqrt(alpha) * x_ret;
  double xi_max = std::max(xi_ret + 1.0, std::sqrt(2.0 * state.n + 1.0) + 8.0);
  while (tail_remainder_bound(state.n, xi_max) > 1e-13 && xi_max < 40.0)
    xi_max += 1.0;
  if (xi_max <= xi_ret) return tail_remainder_bound(state.n, xi_ret);

  const int n = state.n;
  const double integral = specfun::integrate_adaptive(
      [n](double xi) {
        const double h = hermite_function(n, xi);
        return h * h;
      },
      xi_ret, xi_max, 0.1 * tol.tail_quadrature);
  return std::clamp(2.0 * integral, 0.0, 1.0);
}

}  // namespace phasetail::oscillator
