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

#ifndef PHASETAIL_KERNELS_SAMPLE_KERNELS_HPP
#define PHASETAIL_KERNELS_SAMPLE_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace phasetail::kernels {

// Data-parallel inner loops of the Monte Carlo stage.  Two interchangeable
// backends: a scalar reference and an AVX2 variant selected at run time.
// The contract is bit-identical output -- point i depends only on (seed,
// base + i), and every floating-point operation is IEEE-exact and performed
// in the same order in both backends.

struct Ops {
  const char* name;

  // Fill out_x/out_p[i], i in [0, n), with draws x ~ N(0, sigma_x^2),
  // p ~ N(0, sigma_p^2) at counter indices base + i under the given seed.
  void (*gaussian_fill)(std::uint64_t seed, std::uint64_t base, std::size_t n,
                        double sigma_x, double sigma_p, double* out_x,
                        double* out_p);

  // In-place phase-space rotation
  //   x' = x c + (p / (m omega)) s,   p' = p c - (m omega x) s.
  void (*rotate)(double* x, double* p, std::size_t n, double c, double s,
                 double momega, double inv_momega);

  // #{ i : |v_i| > threshold }.
  std::size_t (*count_beyond)(const double* v, std::size_t n, double threshold);
};

const Ops& scalar_ops();

// nullptr when the build target or the running CPU lacks AVX2+FMA.
const Ops* avx2_ops();

// Backend used by the ensemble module: the AVX2 variant when available,
// overridable with PHASETAIL_KERNELS=scalar|avx2.
const Ops& active_ops();

}  // namespace phasetail::kernels

#endif
