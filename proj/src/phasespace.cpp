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

#include "phasetail/phasespace.hpp"

#include <cmath>
#include <stdexcept>

#include "phasetail/specfun.hpp"

namespace phasetail::phasespace {

double PhaseSpaceGaussian::value(double x, double p) const {
  const double ax = x / sigma_x;
  const double ap = p / sigma_p;
  return norm * std::exp(-0.5 * ax * ax - 0.5 * ap * ap);
}

PhaseSpaceGaussian ground_state_distribution(
    const oscillator::OscillatorConfig& config) {
  const double alpha = config.alpha;
  return {1.0 / std::sqrt(2.0 * alpha),
          config.hbar * std::sqrt(0.5 * alpha),
          1.0 / (M_PI * config.hbar), config};
}

PhaseSpaceGaussian scaled_distribution(const oscillator::OscillatorConfig& config,
                                       double sigma_x, double sigma_p) {
  if (!(sigma_x > 0.0) || !(sigma_p > 0.0))
    throw std::invalid_argument("scaled_distribution: sigmas must be positive");
  return {sigma_x, sigma_p, 1.0 / (2.0 * M_PI * sigma_x * sigma_p), config};
}

double momentum_marginal(const PhaseSpaceGaussian& F, double p) {
  const double a = p / F.sigma_p;
  return std::exp(-0.5 * a * a) / (F.sigma_p * std::sqrt(2.0 * M_PI));
}

double position_marginal(const PhaseSpaceGaussian& F, double x) {
  const double a = x / F.sigma_x;
  return std::exp(-0.5 * a * a) / (F.sigma_x * std::sqrt(2.0 * M_PI));
}

double classical_tail_probability(const PhaseSpaceGaussian& F, double p0) {
  if (!(p0 > 0.0) || !std::isfinite(p0))
    throw std::invalid_argument("classical_tail_probability: p0 must be positive");
  // p0 / (sqrt(2) sigma_p); equals p0 / (sqrt(alpha) hbar) for the
  // ground-state construction
  const double arg =
      double((long double)p0 / (std::sqrt(2.0L) * (long double)F.sigma_p));
  return specfun::gaussian_tail(arg);
}

EquivalenceReport check_equivalence(const oscillator::OscillatorConfig& config,
                                    double H0) {
  const auto tp = oscillator::turning_points(H0, config);
  // Both erf arguments in extended precision: the identity
  // p0/(sqrt(alpha) hbar) = sqrt(alpha) x_ret is algebraic, and erfc
  // amplifies argument error by ~2z^2, so the few extra bits keep the
  // 1e-12 relative agreement with margin for any parameter choice.
  const long double sqrt_alpha = std::sqrt((long double)config.alpha);
  const double rhs = double(sqrt_alpha * (long double)tp.x_ret);
  const double lhs =
      double((long double)tp.p0 / (sqrt_alpha * (long double)config.hbar));

  EquivalenceReport rep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.residual = std::fabs(lhs - rhs);
  rep.pr_quantum = specfun::gaussian_tail(rhs);
  rep.pr_classical = specfun::gaussian_tail(lhs);
  return rep;
}

namespace {

// H_n(xi) / sqrt(2^n n!) by the scaled recurrence (no Gaussian factor).
double scaled_poly(int n, double xi) {
  double gm = 0.0;
  double g = 1.0;
  for (int k = 0; k < n; ++k) {
    const double gp =
        xi * std::sqrt(2.0 / (k + 1)) * g - std::sqrt(double(k) / (k + 1)) * gm;
    gm = g;
    g = gp;
  }
  return g;
}

const specfun::QuadratureRule& wigner_rule(double kappa) {
  static const auto order64 = specfun::gauss_hermite(64);
  static const auto order128 = specfun::gauss_hermite(128);
  return std::fabs(kappa) > 10.0 ? order128 : order64;
}

}  // namespace

double wigner_point(const oscillator::QuantumState& state, double x, double p) {
  const double alpha = state.config.alpha;
  const double hbar = state.config.hbar;
  const double sa = std::sqrt(alpha);
  const double xi = sa * x;
  const double kappa = 2.0 * p / (hbar * sa);

  // W = e^{-xi^2} / (pi^{3/2} hbar) *
  //     int g_n(xi+u) g_n(xi-u) cos(kappa u) e^{-u^2} du,
  // where g_n = H_n / sqrt(2^n n!).  The integrand (without the weight) is
  // an even polynomial of degree 2n times cos, so Gauss-Hermite converges
  // to machine precision for the orders used here.
  const auto& rule = wigner_rule(kappa);
  double sum = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    const double u = rule.nodes[i];
    sum += rule.weights[i] * scaled_poly(state.n, xi + u) *
           scaled_poly(state.n, xi - u) * std::cos(kappa * u);
  }
  const double pi32 = M_PI * std::sqrt(M_PI);
  return std::exp(-xi * xi) * sum / (pi32 * hbar);
}

WignerField wigner_transform(const oscillator::QuantumState& state,
                             const std::vector<double>& x_grid,
                             const std::vector<double>& p_grid) {
  if (x_grid.empty() || p_grid.empty())
    throw std::invalid_argument("wigner_transform: grids must be non-empty");
  for (double v : x_grid)
    if (!std::isfinite(v))
      throw std::invalid_argument("wigner_transform: grid values must be finite");
  for (double v : p_grid)
    if (!std::isfinite(v))
      throw std::invalid_argument("wigner_transform: grid values must be finite");

  WignerField field;
  field.x = x_grid;
  field.p = p_grid;
  field.n = state.n;
  field.w.resize(x_grid.size() * p_grid.size());
  for (std::size_t ix = 0; ix < x_grid.size(); ++ix)
    for (std::size_t ip = 0; ip < p_grid.size(); ++ip)
      field.w[ix * p_grid.size() + ip] =
          wigner_point(state, x_grid[ix], p_grid[ip]);
  return field;
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
  if (count < 1) throw std::invalid_argument("uniform_grid: count must be >= 1");
  std::vector<double> g(count);
  if (count == 1) {
    g[0] = 0.5 * (lo + hi);
    return g;
  }
  for (int i = 0; i < count; ++i)
    g[i] = lo + (hi - lo) * double(i) / double(count - 1);
  return g;
}

}  // namespace phasetail::phasespace
