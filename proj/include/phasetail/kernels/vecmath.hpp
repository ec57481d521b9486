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

#ifndef PHASETAIL_KERNELS_VECMATH_HPP
#define PHASETAIL_KERNELS_VECMATH_HPP

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>

#include "phasetail/kernels/philox.hpp"

// Deterministic log / sincos cores for the Gaussian sampling kernels.
//
// The SIMD backends must reproduce the scalar reference stream bit for bit,
// which rules out libm (its vector variants round differently).  These
// routines use only IEEE-exact building blocks -- +,-,*,/ (correctly
// rounded), fma, sqrt, and exact integer/bit manipulation -- arranged in a
// fixed operation order that the AVX2 code mirrors lane-wise.  Accuracy is
// a couple of ulp, far tighter than anything the Monte Carlo statistics can
// resolve.

namespace phasetail::kernels {

// log(2) split so that e * kLn2Hi is exact for |e| <= 2^11.
inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;
inline constexpr double kSqrt2 = 1.41421356237309504880;

// pi/2 split with 33 high bits: q * kPio2Hi is exact for q <= 4.
inline constexpr double kPio2Hi = 1.57079632673412561417e+00;
inline constexpr double kPio2Lo = 6.07710050650619224932e-11;
inline constexpr double kTwoOverPi = 6.36619772367581382433e-01;
inline constexpr double kTwoPi = 6.28318530717958647693e+00;

// atanh series: log(m) = 2z * sum w^k/(2k+1), z = (m-1)/(m+1), w = z^2.
inline constexpr std::array<double, 12> kLogCoeff = {
    1.0,        1.0 / 3.0,  1.0 / 5.0,  1.0 / 7.0,  1.0 / 9.0,  1.0 / 11.0,
    1.0 / 13.0, 1.0 / 15.0, 1.0 / 17.0, 1.0 / 19.0, 1.0 / 21.0, 1.0 / 23.0};

// Maclaurin tails on |r| <= pi/4: sin(r) = r + r^3 * S(r^2), truncation
// below 1e-16 of the result.
inline constexpr std::array<double, 8> kSinCoeff = {
    -1.0 / 6.0,
    1.0 / 120.0,
    -1.0 / 5040.0,
    1.0 / 362880.0,
    -1.0 / 39916800.0,
    1.0 / 6227020800.0,
    -1.0 / 1307674368000.0,
    1.0 / 355687428096000.0};

// cos(r) = 1 + r^2 * (-1/2 + r^4-part): coefficients for the w^2 polynomial.
inline constexpr std::array<double, 8> kCosCoeff = {
    1.0 / 24.0,
    -1.0 / 720.0,
    1.0 / 40320.0,
    -1.0 / 3628800.0,
    1.0 / 479001600.0,
    -1.0 / 87178291200.0,
    1.0 / 20922789888000.0,
    -1.0 / 6402373705728000.0};

/// Natural log for u in (0, 1).  Reference path of the kernel pair.
inline double norm_log(double u) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(u);
  double e = double(int(bits >> 52)) - 1023.0;
  double m = std::bit_cast<double>((bits & 0x000FFFFFFFFFFFFFull) |
                                   0x3FF0000000000000ull);
  if (m > kSqrt2) {
    m = 0.5 * m;
    e += 1.0;
  }
  const double z = (m - 1.0) / (m + 1.0);
  const double w = z * z;
  double p = kLogCoeff[11];
  for (int i = 10; i >= 0; --i) p = std::fma(p, w, kLogCoeff[i]);
  const double logm = (2.0 * z) * p;
  return std::fma(e, kLn2Hi, std::fma(e, kLn2Lo, logm));
}

/// sin and cos for theta in [0, 2*pi).  Reference path of the kernel pair.
inline void norm_sincos(double theta, double& sin_out, double& cos_out) {
  const double qd = std::nearbyint(theta * kTwoOverPi);  // 0..4
  const double r1 = theta - qd * kPio2Hi;                // exact
  const double r = std::fma(-qd, kPio2Lo, r1);
  const double w = r * r;

  double sp = kSinCoeff[7];
  for (int i = 6; i >= 0; --i) sp = std::fma(sp, w, kSinCoeff[i]);
  const double sin_r = std::fma(r * w, sp, r);

  double cp = kCosCoeff[7];
  for (int i = 6; i >= 0; --i) cp = std::fma(cp, w, kCosCoeff[i]);
  const double cos_r = std::fma(w, std::fma(w, cp, -0.5), 1.0);

  const int q = int(qd) & 3;
  const double s = (q & 1) ? cos_r : sin_r;
  const double c = (q & 1) ? sin_r : cos_r;
  sin_out = (q == 2 || q == 3) ? -s : s;
  cos_out = (q == 1 || q == 2) ? -c : c;
}

/// One standard-normal pair from one Philox block (Box-Muller).
struct GaussPair {
  double z0;
  double z1;
};

inline GaussPair gaussian_from_block(const std::array<std::uint32_t, 4>& blk) {
  const std::uint64_t a = (std::uint64_t(blk[1]) << 32) | blk[0];
  const std::uint64_t b = (std::uint64_t(blk[3]) << 32) | blk[2];
  const double u1 = (double(a >> 12) + 0.5) * 0x1p-52;  // (0, 1)
  const double u2 = double(b >> 12) * 0x1p-52;          // [0, 1)
  const double radius = std::sqrt(-2.0 * norm_log(u1));
  double s, c;
  norm_sincos(kTwoPi * u2, s, c);
  return {radius * c, radius * s};
}

}  // namespace phasetail::kernels

#endif
