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

#ifndef PHASETAIL_NUMERICS_HPP
#define PHASETAIL_NUMERICS_HPP

#include <cstddef>

namespace phasetail {

/// Single configuration record for every tolerance and numeric cap used by
/// the library.  All values are fixed here, not calibrated at run time.
struct Tolerances {
  double quad_node_residual = 1e-14;  // Newton residual on quadrature nodes
  int quad_max_order = 128;           // Gauss-Hermite order cap
  double tail_quadrature = 1e-9;      // excited-state tail integrals
  double equivalence_rel = 1e-12;     // pr_quantum vs pr_classical, relative
  double flux_conservation = 1e-10;   // |T + R - 1| per scattering solve
  double transfer_tol = 1e-9;         // slice-doubling convergence on T
  std::size_t transfer_slice_cap = std::size_t(1) << 16;
  double wigner_grid_dev = 1e-10;     // ground-state field vs closed form
  double mc_stderr_band = 4.0;        // acceptance band in binomial std errors

  static const Tolerances& defaults();
};

}  // namespace phasetail

#endif
