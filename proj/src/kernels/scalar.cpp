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

#include <cmath>

#include "phasetail/kernels/sample_kernels.hpp"
#include "phasetail/kernels/vecmath.hpp"

namespace phasetail::kernels {

namespace {

void gaussian_fill_scalar(std::uint64_t seed, std::uint64_t base, std::size_t n,
                          double sigma_x, double sigma_p, double* out_x,
                          double* out_p) {
  const PhiloxKey key = philox_key_from_seed(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const GaussPair z = gaussian_from_block(philox4x32(philox_counter(base + i), key));
    out_x[i] = sigma_x * z.z0;
    out_p[i] = sigma_p * z.z1;
  }
}

void rotate_scalar(double* x, double* p, std::size_t n, double c, double s,
                   double momega, double inv_momega) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double pi = p[i];
    const double u = (pi * inv_momega) * s;
    const double w = (xi * momega) * s;
    x[i] = std::fma(xi, c, u);
    p[i] = std::fma(pi, c, -w);
  }
}

std::size_t count_beyond_scalar(const double* v, std::size_t n,
                                double threshold) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (std::fabs(v[i]) > threshold) ++count;
  return count;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar", &gaussian_fill_scalar, &rotate_scalar,
                       &count_beyond_scalar};
  return ops;
}

}  // namespace phasetail::kernels
