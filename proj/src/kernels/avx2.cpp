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

// AVX2+FMA variant of the sampling kernels.  Lane-wise mirror of the scalar
// reference in vecmath.hpp: the same IEEE operations in the same order, so
// the two backends produce bit-identical streams (enforced by tests).

#include "phasetail/kernels/sample_kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

#include "phasetail/kernels/vecmath.hpp"

namespace phasetail::kernels {

namespace {

const __m256i kLo32 = _mm256_set1_epi64x(0xFFFFFFFFll);
const __m256i kExpMagicBits = _mm256_set1_epi64x(0x4330000000000000ll);
const __m256d kExpMagic = _mm256_set1_pd(0x1p52);
const __m256d kSignBit = _mm256_set1_pd(-0.0);

// Exact u64 -> double for values < 2^52.
inline __m256d small_u64_to_double(__m256i v) {
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, kExpMagicBits)),
                       kExpMagic);
}

// Exact double -> int bits for small non-negative integers (< 2^51).
inline __m256i small_double_to_int(__m256d v) {
  return _mm256_castpd_si256(_mm256_add_pd(v, _mm256_set1_pd(0x1.8p52)));
}

// Four Philox4x32-10 blocks; lanes hold one 32-bit word per block,
// zero-extended to 64 bits (upper halves may carry garbage that never
// reaches the low words: XOR is bitwise and the multiplier reads only the
// low 32 bits).
inline void philox4x32_x4(__m256i& c0, __m256i& c1, __m256i& c2, __m256i& c3,
                          std::uint64_t seed) {
  const __m256i m0 = _mm256_set1_epi64x(0xD2511F53ll);
  const __m256i m1 = _mm256_set1_epi64x(0xCD9E8D57ll);
  const __m256i w0 = _mm256_set1_epi64x(0x9E3779B9ll);
  const __m256i w1 = _mm256_set1_epi64x(0xBB67AE85ll);
  __m256i k0 = _mm256_set1_epi64x(std::int64_t(std::uint32_t(seed)));
  __m256i k1 = _mm256_set1_epi64x(std::int64_t(std::uint32_t(seed >> 32)));

  for (int round = 0; round < 10; ++round) {
    const __m256i p0 = _mm256_mul_epu32(m0, c0);
    const __m256i p1 = _mm256_mul_epu32(m1, c2);
    const __m256i hi0 = _mm256_srli_epi64(p0, 32);
    const __m256i lo0 = _mm256_and_si256(p0, kLo32);
    const __m256i hi1 = _mm256_srli_epi64(p1, 32);
    const __m256i lo1 = _mm256_and_si256(p1, kLo32);
    c0 = _mm256_xor_si256(_mm256_xor_si256(hi1, c1), k0);
    c2 = _mm256_xor_si256(_mm256_xor_si256(hi0, c3), k1);
    c1 = lo1;
    c3 = lo0;
    k0 = _mm256_add_epi64(k0, w0);
    k1 = _mm256_add_epi64(k1, w1);
  }
}

inline __m256d norm_log_x4(__m256d u) {
  const __m256i bits = _mm256_castpd_si256(u);
  __m256d e = _mm256_sub_pd(small_u64_to_double(_mm256_srli_epi64(bits, 52)),
                            _mm256_set1_pd(1023.0));
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll)),
      _mm256_set1_epi64x(0x3FF0000000000000ll)));
  const __m256d gt = _mm256_cmp_pd(m, _mm256_set1_pd(kSqrt2), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(_mm256_set1_pd(0.5), m), gt);
  e = _mm256_add_pd(e, _mm256_and_pd(gt, _mm256_set1_pd(1.0)));

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d z = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d w = _mm256_mul_pd(z, z);
  __m256d p = _mm256_set1_pd(kLogCoeff[11]);
  for (int i = 10; i >= 0; --i)
    p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(kLogCoeff[i]));
  const __m256d logm = _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(2.0), z), p);
  return _mm256_fmadd_pd(
      e, _mm256_set1_pd(kLn2Hi),
      _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Lo), logm));
}

inline void norm_sincos_x4(__m256d theta, __m256d& sin_out, __m256d& cos_out) {
  const __m256d qd = _mm256_round_pd(
      _mm256_mul_pd(theta, _mm256_set1_pd(kTwoOverPi)),
      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d r1 =
      _mm256_sub_pd(theta, _mm256_mul_pd(qd, _mm256_set1_pd(kPio2Hi)));
  const __m256d r = _mm256_fmadd_pd(_mm256_xor_pd(qd, kSignBit),
                                    _mm256_set1_pd(kPio2Lo), r1);
  const __m256d w = _mm256_mul_pd(r, r);

  __m256d sp = _mm256_set1_pd(kSinCoeff[7]);
  for (int i = 6; i >= 0; --i)
    sp = _mm256_fmadd_pd(sp, w, _mm256_set1_pd(kSinCoeff[i]));
  const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(r, w), sp, r);

  __m256d cp = _mm256_set1_pd(kCosCoeff[7]);
  for (int i = 6; i >= 0; --i)
    cp = _mm256_fmadd_pd(cp, w, _mm256_set1_pd(kCosCoeff[i]));
  const __m256d cos_r = _mm256_fmadd_pd(
      w, _mm256_fmadd_pd(w, cp, _mm256_set1_pd(-0.5)), _mm256_set1_pd(1.0));

  const __m256i j = small_double_to_int(qd);
  const __m256i one64 = _mm256_set1_epi64x(1);
  const __m256i two64 = _mm256_set1_epi64x(2);
  const __m256d swap = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(j, one64), one64));
  const __m256d sneg = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(j, two64), two64));
  const __m256d cneg = _mm256_castsi256_pd(_mm256_cmpeq_epi64(
      _mm256_and_si256(_mm256_add_epi64(j, one64), two64), two64));

  const __m256d s = _mm256_blendv_pd(sin_r, cos_r, swap);
  const __m256d c = _mm256_blendv_pd(cos_r, sin_r, swap);
  sin_out = _mm256_xor_pd(s, _mm256_and_pd(sneg, kSignBit));
  cos_out = _mm256_xor_pd(c, _mm256_and_pd(cneg, kSignBit));
}

void gaussian_fill_avx2(std::uint64_t seed, std::uint64_t base, std::size_t n,
                        double sigma_x, double sigma_p, double* out_x,
                        double* out_p) {
  const std::size_t n4 = n & ~std::size_t(3);
  const __m256d vsx = _mm256_set1_pd(sigma_x);
  const __m256d vsp = _mm256_set1_pd(sigma_p);
  const __m256i lane = _mm256_setr_epi64x(0, 1, 2, 3);

  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256i idx =
        _mm256_add_epi64(_mm256_set1_epi64x(std::int64_t(base + i)), lane);
    __m256i c0 = _mm256_and_si256(idx, kLo32);
    __m256i c1 = _mm256_srli_epi64(idx, 32);
    __m256i c2 = _mm256_setzero_si256();
    __m256i c3 = _mm256_setzero_si256();
    philox4x32_x4(c0, c1, c2, c3, seed);

    const __m256i a = _mm256_or_si256(_mm256_slli_epi64(c1, 32),
                                      _mm256_and_si256(c0, kLo32));
    const __m256i b = _mm256_or_si256(_mm256_slli_epi64(c3, 32),
                                      _mm256_and_si256(c2, kLo32));

    const __m256d da = small_u64_to_double(_mm256_srli_epi64(a, 12));
    const __m256d db = small_u64_to_double(_mm256_srli_epi64(b, 12));
    const __m256d u1 = _mm256_mul_pd(_mm256_add_pd(da, _mm256_set1_pd(0.5)),
                                     _mm256_set1_pd(0x1p-52));
    const __m256d u2 = _mm256_mul_pd(db, _mm256_set1_pd(0x1p-52));

    const __m256d radius = _mm256_sqrt_pd(
        _mm256_mul_pd(_mm256_set1_pd(-2.0), norm_log_x4(u1)));
    __m256d s, c;
    norm_sincos_x4(_mm256_mul_pd(_mm256_set1_pd(kTwoPi), u2), s, c);

    _mm256_storeu_pd(out_x + i, _mm256_mul_pd(vsx, _mm256_mul_pd(radius, c)));
    _mm256_storeu_pd(out_p + i, _mm256_mul_pd(vsp, _mm256_mul_pd(radius, s)));
  }

  // Remainder through the scalar core: same operations, same bits.
  const PhiloxKey key = philox_key_from_seed(seed);
  for (std::size_t i = n4; i < n; ++i) {
    const GaussPair z =
        gaussian_from_block(philox4x32(philox_counter(base + i), key));
    out_x[i] = sigma_x * z.z0;
    out_p[i] = sigma_p * z.z1;
  }
}

void rotate_avx2(double* x, double* p, std::size_t n, double c, double s,
                 double momega, double inv_momega) {
  const std::size_t n4 = n & ~std::size_t(3);
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  const __m256d vmw = _mm256_set1_pd(momega);
  const __m256d vinv = _mm256_set1_pd(inv_momega);

  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x + i);
    const __m256d pi = _mm256_loadu_pd(p + i);
    const __m256d u = _mm256_mul_pd(_mm256_mul_pd(pi, vinv), vs);
    const __m256d w = _mm256_mul_pd(_mm256_mul_pd(xi, vmw), vs);
    _mm256_storeu_pd(x + i, _mm256_fmadd_pd(xi, vc, u));
    _mm256_storeu_pd(p + i, _mm256_fmadd_pd(pi, vc, _mm256_xor_pd(w, kSignBit)));
  }
  for (std::size_t i = n4; i < n; ++i) {
    const double xi = x[i];
    const double pi = p[i];
    const double u = (pi * inv_momega) * s;
    const double w = (xi * momega) * s;
    x[i] = std::fma(xi, c, u);
    p[i] = std::fma(pi, c, -w);
  }
}

std::size_t count_beyond_avx2(const double* v, std::size_t n,
                              double threshold) {
  const std::size_t n4 = n & ~std::size_t(3);
  const __m256d vthr = _mm256_set1_pd(threshold);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d a = _mm256_andnot_pd(kSignBit, _mm256_loadu_pd(v + i));
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(a, vthr, _CMP_GT_OQ));
    count += std::size_t(__builtin_popcount(unsigned(mask)));
  }
  for (std::size_t i = n4; i < n; ++i)
    if (std::fabs(v[i]) > threshold) ++count;
  return count;
}

}  // namespace

const Ops* avx2_ops() {
  if (!(__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")))
    return nullptr;
  static const Ops ops{"avx2", &gaussian_fill_avx2, &rotate_avx2,
                       &count_beyond_avx2};
  return &ops;
}

}  // namespace phasetail::kernels

#else

namespace phasetail::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace phasetail::kernels

#endif
