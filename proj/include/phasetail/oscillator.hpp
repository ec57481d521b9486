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

#ifndef PHASETAIL_OSCILLATOR_HPP
#define PHASETAIL_OSCILLATOR_HPP

#include "phasetail/numerics.hpp"

namespace phasetail::oscillator {

/// Physical parameters of the oscillator V(x) = C^2 x^2 / 2 and the derived
/// constants used throughout.  Single source of unit conventions.
struct OscillatorConfig {
  double m;     // particle mass, > 0
  double C;     // stiffness coefficient, > 0
  double hbar;  // action quantum, > 0

  // derived: omega = C / sqrt(m), nu = omega / 2pi, alpha = C sqrt(m) / hbar
  double omega;
  double nu;
  double alpha;

  OscillatorConfig(double m, double C, double hbar);
  static OscillatorConfig natural() { return {1.0, 1.0, 1.0}; }
};

/// Stationary state |n> of an oscillator; n is capped at 128.
struct QuantumState {
  int n;
  OscillatorConfig config;
  QuantumState(int n, const OscillatorConfig& config);
};

/// Classical turning points +-x_ret of a particle with energy H0, together
/// with the momentum p0 = sqrt(2 m H0) carrying the same energy.
struct TurningPoints {
  double x_ret;
  double H0;
  double p0;
};

/// E_n = (n + 1/2) h nu with h = 2 pi hbar.
double energy(int n, const OscillatorConfig& config);

/// Normalised eigenfunction
///   psi_n(x) = (sqrt(alpha) / (sqrt(pi) 2^n n!))^{1/2}
///              e^{-alpha x^2 / 2} H_n(sqrt(alpha) x),
/// evaluated through the orthonormal recurrence (overflow-free in n).
double eigenfunction(const QuantumState& state, double x);

/// |psi_n(x)|^2; for n = 0 this is (alpha/pi)^{1/2} e^{-alpha x^2}.
double density(const QuantumState& state, double x);

/// x_ret = sqrt(2 H0) / C, p0 = sqrt(2 m H0).  Rejects H0 <= 0.
TurningPoints turning_points(double H0, const OscillatorConfig& config);

/// The hbar-omega energy convention H0 = hbar C / sqrt(m), exposed as
/// "paper" in run configurations; twice the ground energy E_0.
double paper_h0(const OscillatorConfig& config);

/// Two-sided probability mass of |psi_n|^2 beyond +-x_ret.  Closed form
/// 1 - erf(sqrt(alpha) x_ret) for n = 0; adaptive quadrature with an
/// analytic Gaussian remainder bound for n >= 1.  Rejects x_ret <= 0.
double quantum_tail_probability(const QuantumState& state, double x_ret,
                                const Tolerances& tol = Tolerances::defaults());

}  // namespace phasetail::oscillator

#endif
