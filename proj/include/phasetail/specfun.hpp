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

#ifndef PHASETAIL_SPECFUN_HPP
#define PHASETAIL_SPECFUN_HPP

#include <functional>
#include <vector>

#include "phasetail/numerics.hpp"

namespace phasetail::specfun {

/// Fixed quadrature rule.  Nodes are strictly increasing and weights are
/// all positive; rules are immutable after construction and safe to share.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
/// H_0 = 1, H_1 = 2x, H_{n+1} = 2 x H_n - 2 n H_{n-1}.
double hermite(int n, double x);

/// Error function, |error| <= 1e-13 absolute (rational approximations with
/// split-exponential correction; relative accuracy is ulp-level across the
/// whole range including the deep erfc tail).
double erf(double x);

/// Complementary error function 1 - erf(x), computed to ulp-level relative
/// accuracy down to the underflow threshold (x ~ 26.5).
double erfc(double x);

/// Two-sided tail mass of the weight-normalised Gaussian e^{-t^2}/sqrt(pi)
/// beyond +-z, i.e. erfc(z).  For z >= 0 this is a probability in [0, 1];
/// the same expression 1 - erf(z) is continued to z < 0, where it equals
/// 1 + erf(|z|) (mass of the whole line plus the |z|-centred band), so the
/// value ranges over (1, 2) there.
double gaussian_tail(double z);

/// Gauss-Hermite rule: integrates f against e^{-x^2} over the real line,
/// exactly for polynomials of degree <= 2*order - 1.  Nodes are symmetric
/// about zero.  order must be in [1, 128].
QuadratureRule gauss_hermite(int order);

/// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree
/// <= 2*order - 1.  Internal helper for finite-interval integrals.
QuadratureRule gauss_legendre(int order);

/// Integral of f over [a, b] using a Gauss-Legendre rule mapped affinely.
double integrate(const QuadratureRule& gl, double a, double b,
                 const std::function<double(double)>& f);

/// Adaptive bisection with an embedded whole-vs-halves Gauss-Legendre error
/// estimate.  abs_tol is an absolute tolerance on the result.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol);

}  // namespace phasetail::specfun

#endif
