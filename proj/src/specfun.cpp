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

#include "phasetail/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace phasetail {

const Tolerances& Tolerances::defaults() {
  static const Tolerances t{};
  return t;
}

}  // namespace phasetail

namespace phasetail::specfun {

namespace {

// Rational Chebyshev approximations for erf/erfc after W. J. Cody,
// Math. Comp. 23 (1969) 631-638 (the netlib SPECFUN coefficient set,
// good to ~18 significant digits before rounding).
constexpr double kErfA[5] = {3.1611237438705656, 113.864154151050156,
                             377.485237685302021, 3209.37758913846947,
                             0.185777706184603153};
constexpr double kErfB[4] = {23.6012909523441209, 244.024637934444173,
                             1282.61652607737228, 2844.23683343917062};
constexpr double kErfcC[9] = {
    0.564188496988670089, 8.88314979438837594, 66.1191906371416295,
    298.635138197400131,  881.95222124176909,  1712.04761263407058,
    2051.07837782607147,  1230.33935479799725, 2.15311535474403846e-8};
constexpr double kErfcD[8] = {15.7449261107098347, 117.693950891312499,
                              537.181101862009858, 1621.38957456669019,
                              3290.79923573345963, 4362.61909014324716,
                              3439.36767414372164, 1230.33935480374942};
constexpr double kErfcP[6] = {0.305326634961232344, 0.360344899949804439,
                              0.125781726111229246, 0.0160837851487422766,
                              6.58749161529837803e-4, 0.0163153871373020978};
constexpr double kErfcQ[5] = {2.56852019228982242, 1.87295284992346047,
                              0.527905102951428412, 0.0605183413124413191,
                              0.00233520497626869185};

constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr double kErfThresh = 0.46875;
constexpr double kErfcUnderflow = 26.543;  // erfc < DBL_MIN beyond this

// exp(-y*y) with the argument split at a multiple of 1/16 so that the
// squared high part is exact; recovers the last couple of bits that a
// direct exp(-y*y) loses to the rounding of y*y.
double exp_neg_sq(double y) {
  const double hi = std::trunc(y * 16.0) / 16.0;
  const double del = (y - hi) * (y + hi);
  return std::exp(-hi * hi) * std::exp(-del);
}

// erf(x) for |x| <= 0.46875.
double erf_small(double x) {
  const double y = std::fabs(x);
  double ysq = 0.0;
  if (y > 1.11e-16) ysq = y * y;
  double num = kErfA[4] * ysq;
  double den = ysq;
  for (int i = 0; i < 3; ++i) {
    num = (num + kErfA[i]) * ysq;
    den = (den + kErfB[i]) * ysq;
  }
  return x * (num + kErfA[3]) / (den + kErfB[3]);
}

// erfc(y) for 0.46875 < y <= 4.
double erfc_mid(double y) {
  double num = kErfcC[8] * y;
  double den = y;
  for (int i = 0; i < 7; ++i) {
    num = (num + kErfcC[i]) * y;
    den = (den + kErfcD[i]) * y;
  }
  return exp_neg_sq(y) * (num + kErfcC[7]) / (den + kErfcD[7]);
}

// erfc(y) for y > 4.
double erfc_large(double y) {
  if (y >= kErfcUnderflow) return 0.0;
  const double ysq = 1.0 / (y * y);
  double num = kErfcP[5] * ysq;
  double den = ysq;
  for (int i = 0; i < 4; ++i) {
    num = (num + kErfcP[i]) * ysq;
    den = (den + kErfcQ[i]) * ysq;
  }
  double r = ysq * (num + kErfcP[4]) / (den + kErfcQ[4]);
  r = (kInvSqrtPi - r) / y;
  return exp_neg_sq(y) * r;
}

}  // namespace

double erf(double x) {
  if (std::isnan(x)) return x;
  const double y = std::fabs(x);
  if (y <= kErfThresh) return erf_small(x);
  const double c = (y <= 4.0) ? erfc_mid(y) : erfc_large(y);
  const double r = (0.5 - c) + 0.5;
  return x < 0.0 ? -r : r;
}

double erfc(double x) {
  if (std::isnan(x)) return x;
  const double y = std::fabs(x);
  double r;
  if (y <= kErfThresh) {
    r = 1.0 - erf_small(y);
  } else if (y <= 4.0) {
    r = erfc_mid(y);
  } else {
    r = erfc_large(y);
  }
  return x < 0.0 ? 2.0 - r : r;
}

double gaussian_tail(double z) { return erfc(z); }

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
  if (!std::isfinite(x)) throw std::invalid_argument("hermite: x must be finite");
  double hm = 0.0;  // H_{k-1}
  double h = 1.0;   // H_k, k = 0
  for (int k = 0; k < n; ++k) {
    const double hp = 2.0 * x * h - 2.0 * double(k) * hm;
    hm = h;
    h = hp;
  }
  return h;
}

namespace {

// Hermite polynomial orthonormal under e^{-x^2}: ~H_n = H_n / sqrt(2^n n! sqrt(pi)).
// Returns {~H_n(x), d~H_n/dx}; overflow-free for any order we support.
struct ScaledHermite {
  double value;
  double derivative;
};

ScaledHermite scaled_hermite(int n, double x) {
  constexpr double kPiQuarterInv = 0.75112554446494248286;  // pi^{-1/4}
  double hm = 0.0;
  double h = kPiQuarterInv;
  for (int k = 0; k < n; ++k) {
    const double hp =
        x * std::sqrt(2.0 / (k + 1)) * h - std::sqrt(double(k) / (k + 1)) * hm;
    hm = h;
    h = hp;
  }
  return {h, n > 0 ? std::sqrt(2.0 * n) * hm : 0.0};
}

}  // namespace

QuadratureRule gauss_hermite(int order) {
  const Tolerances& tol = Tolerances::defaults();
  if (order < 1 || order > tol.quad_max_order)
    throw std::invalid_argument("gauss_hermite: order must be in [1, " +
                                std::to_string(tol.quad_max_order) + "]");

  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);

  const int half = (order + 1) / 2;
  std::vector<double> roots(half), weights(half);

  // Newton iteration on the scaled recurrence, largest root first, with the
  // classic asymptotic initial guesses.
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * order + 1.0) -
          1.85575 * std::pow(2.0 * order + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(double(order), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * roots[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * roots[1];
    } else {
      z = 2.0 * z - roots[i - 2];
    }
    ScaledHermite h{};
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      h = scaled_hermite(order, z);
      const double dz = h.value / h.derivative;
      z -= dz;
      if (std::fabs(dz) <= tol.quad_node_residual * std::max(1.0, std::fabs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw std::runtime_error("gauss_hermite: node iteration did not converge");
    if (order % 2 == 1 && i == half - 1) z = 0.0;  // centre root is exact
    h = scaled_hermite(order, z);
    roots[i] = z;
    weights[i] = 2.0 / (h.derivative * h.derivative);
  }

  for (int i = 0; i < half; ++i) {
    rule.nodes[order - 1 - i] = roots[i];
    rule.nodes[i] = -roots[i];
    rule.weights[order - 1 - i] = weights[i];
    rule.weights[i] = weights[i];
  }
  return rule;
}

QuadratureRule gauss_legendre(int order) {
  const Tolerances& tol = Tolerances::defaults();
  if (order < 1 || order > tol.quad_max_order)
    throw std::invalid_argument("gauss_legendre: order must be in [1, " +
                                std::to_string(tol.quad_max_order) + "]");

  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);

  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < order; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1);
      }
      pp = order * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::fabs(dz) <= tol.quad_node_residual) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw std::runtime_error("gauss_legendre: node iteration did not converge");
    if (order % 2 == 1 && i == half - 1) z = 0.0;
    rule.nodes[i] = -z;
    rule.nodes[order - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

double integrate(const QuadratureRule& gl, double a, double b,
                 const std::function<double(double)>& f) {
  const double mid = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i)
    sum += gl.weights[i] * f(mid + hw * gl.nodes[i]);
  return hw * sum;
}

namespace {

double integrate_recurse(const QuadratureRule& gl,
                         const std::function<double(double)>& f, double a,
                         double b, double whole, double abs_tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = integrate(gl, a, mid, f);
  const double right = integrate(gl, mid, b, f);
  const double halves = left + right;
  if (std::fabs(halves - whole) <= abs_tol || depth >= 48) return halves;
  return integrate_recurse(gl, f, a, mid, left, 0.5 * abs_tol, depth + 1) +
         integrate_recurse(gl, f, mid, b, right, 0.5 * abs_tol, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol) {
  static const QuadratureRule gl = gauss_legendre(20);
  if (a == b) return 0.0;
  const double whole = integrate(gl, a, b, f);
  // The embedded estimate compares a 20-point panel against its bisection;
  // ask for a tighter internal tolerance than the caller's.
  return integrate_recurse(gl, f, a, b, whole, 0.25 * abs_tol, 0);
}

}  // namespace phasetail::specfun
