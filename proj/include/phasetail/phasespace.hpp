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

#ifndef PHASETAIL_PHASESPACE_HPP
#define PHASETAIL_PHASESPACE_HPP

#include <vector>

#include "phasetail/oscillator.hpp"

namespace phasetail::phasespace {

/// Product-Gaussian phase-space density
///   F(x, p) = norm * e^{-x^2/(2 sigma_x^2) - p^2/(2 sigma_p^2)},
/// norm = 1/(2 pi sigma_x sigma_p).  The ground-state construction has
/// sigma_x^2 = 1/(2 alpha), sigma_p^2 = alpha hbar^2 / 2, norm = 1/(pi hbar),
/// which is F_0(x, p) = (1/pi hbar) e^{-alpha x^2 - p^2/(alpha hbar^2)}.
struct PhaseSpaceGaussian {
  double sigma_x;
  double sigma_p;
  double norm;
  oscillator::OscillatorConfig config;

  double value(double x, double p) const;
};

/// The stationary ground-state distribution of the given oscillator.
PhaseSpaceGaussian ground_state_distribution(const oscillator::OscillatorConfig&);

/// Arbitrary product Gaussian over the same oscillator (used e.g. as the
/// deliberately non-stationary control in the ensemble checks).
PhaseSpaceGaussian scaled_distribution(const oscillator::OscillatorConfig&,
                                       double sigma_x, double sigma_p);

/// F(p) = integral of F over x: (1/(sqrt(pi alpha) hbar)) e^{-p^2/(alpha hbar^2)}
/// for the ground-state construction.
double momentum_marginal(const PhaseSpaceGaussian& F, double p);

/// F(x) = integral of F over p: (alpha/pi)^{1/2} e^{-alpha x^2} for the
/// ground-state construction -- identical to the n = 0 quantum density.
double position_marginal(const PhaseSpaceGaussian& F, double x);

/// Two-sided fraction of the ensemble with |p| > p0:
///   2 int_{p0}^inf F(p) dp = 1 - erf(p0 / (sqrt(alpha) hbar))
/// for the ground-state construction.  Rejects p0 <= 0.
double classical_tail_probability(const PhaseSpaceGaussian& F, double p0);

/// Both tail probabilities evaluated from one energy, with the two erf
/// arguments that the identity requires to coincide.
struct EquivalenceReport {
  double pr_quantum;    // 1 - erf(sqrt(alpha) x_ret)
  double pr_classical;  // 1 - erf(p0 / (sqrt(alpha) hbar))
  double lhs;           // p0 / (sqrt(alpha) hbar)
  double rhs;           // sqrt(alpha) x_ret
  double residual;      // |lhs - rhs|
};

EquivalenceReport check_equivalence(const oscillator::OscillatorConfig&,
                                    double H0);

/// Wigner field of state n sampled on the tensor grid x_grid x p_grid,
/// row-major over x (w[ix * p_grid.size() + ip]).
struct WignerField {
  std::vector<double> x;
  std::vector<double> p;
  std::vector<double> w;
  int n = 0;

  double at(std::size_t ix, std::size_t ip) const { return w[ix * p.size() + ip]; }
};

/// W(x, p) = (1/pi hbar) int psi(x+y) psi(x-y) e^{2ipy/hbar} dy, evaluated
/// by Gauss-Hermite quadrature after extracting the Gaussian factor.  Real
/// for the oscillator eigenstates; negative regions appear for n >= 1.
double wigner_point(const oscillator::QuantumState&, double x, double p);

WignerField wigner_transform(const oscillator::QuantumState&,
                             const std::vector<double>& x_grid,
                             const std::vector<double>& p_grid);

std::vector<double> uniform_grid(double lo, double hi, int count);

}  // namespace phasetail::phasespace

#endif
