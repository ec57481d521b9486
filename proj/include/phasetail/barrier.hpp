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

#ifndef PHASETAIL_BARRIER_HPP
#define PHASETAIL_BARRIER_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "phasetail/numerics.hpp"
#include "phasetail/phasespace.hpp"

namespace phasetail::barrier {

/// 1-D potential: either the discontinuous rectangular idealisation or a
/// smooth approximation with continuous first derivative everywhere.  The
/// smooth family uses compactly-supported cubic steps of half-width w at
/// both edges, so V(b) = V(c) = V0/2, V = V0 on [b+w, c-w] (for w <= (c-b)/2)
/// and V = 0 exactly outside [b-w, c+w].
struct PotentialProfile {
  enum class Kind { square, smooth };
  Kind kind = Kind::square;
  double V0 = 0.0;
  double b = 0.0;
  double c = 0.0;
  double w = 0.0;  // 0 only for the square profile

  double operator()(double x) const;
  double support_lo() const { return kind == Kind::square ? b : b - w; }
  double support_hi() const { return kind == Kind::square ? c : c + w; }
  /// Continuous first derivative everywhere?
  bool admissible() const { return kind == Kind::smooth; }
};

PotentialProfile square_profile(double V0, double b, double c);
PotentialProfile smooth_profile(double V0, double b, double c, double w);

/// One scattering solve at energy E.  Flux conservation T + R = 1 holds to
/// rounding for every solve.  regions holds plane-wave coefficients
/// psi = A e^{ikx} + B e^{-ikx} (k imaginary inside an under-barrier
/// region), phase-referenced to each region's left edge; for sliced solves
/// only the incoming and outgoing regions are recorded.
struct ScatteringResult {
  double energy = 0.0;
  double T = 0.0;
  double R = 0.0;
  struct Region {
    std::complex<double> A;
    std::complex<double> B;
    std::complex<double> k;
  };
  std::vector<Region> regions;
};

/// Closed-form rectangular-barrier transmission.  V0 = 0 is the free
/// particle; E = V0 uses the analytic resonant-degenerate limit
/// T = 1 / (1 + m V0 (c-b)^2 / (2 hbar^2)).  Rejects E <= 0 and V0 < 0.
ScatteringResult square_transmission(double V0, double b, double c, double E,
                                     double m, double hbar);

/// Piecewise-constant transfer-matrix solve with the given slice count.
/// Exact (slice-count independent) on square profiles; second-order in the
/// slice width on smooth ones.  Evanescent stretches are handled with
/// rescaled matrices and a log-domain transmission, so arbitrarily thick
/// barriers underflow to T = 0 instead of overflowing.
ScatteringResult transfer_matrix(const PotentialProfile& profile, double E,
                                 double m, double hbar, std::size_t slices);

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Slice-doubling driver with Richardson extrapolation of T; throws
/// NonConvergence if doubling still moves T by more than tol.transfer_tol
/// at the slice cap.
struct ConvergedTransmission {
  double T = 0.0;
  double R = 0.0;
  std::size_t slices = 0;
  double last_delta = 0.0;
};

ConvergedTransmission converged_transmission(
    const PotentialProfile& profile, double E, double m, double hbar,
    const Tolerances& tol = Tolerances::defaults());

/// Two-sided fraction of the ensemble with kinetic energy above the barrier:
/// p^2/(2m) > V0, i.e. 1 - erf(sqrt(2 m V0) / (sqrt(alpha) hbar)) for the
/// ground-state momentum marginal.  Rejects V0 <= 0.
double classical_overbarrier_fraction(const phasespace::PhaseSpaceGaussian& F,
                                      double V0, double m);

}  // namespace phasetail::barrier

#endif
