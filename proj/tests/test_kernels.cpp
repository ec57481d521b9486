#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "oracles.hpp"
#include "phasetail/kernels/philox.hpp"
#include "phasetail/kernels/sample_kernels.hpp"
#include "phasetail/kernels/vecmath.hpp"

using namespace phasetail;

TEST_CASE("philox: block function is a deterministic bijection-like map") {
  const kernels::PhiloxKey key = kernels::philox_key_from_seed(0x12345678abcdef01ull);
  const auto b1 = kernels::philox4x32(kernels::philox_counter(7), key);
  const auto b2 = kernels::philox4x32(kernels::philox_counter(7), key);
  CHECK(b1 == b2);
  const auto b3 = kernels::philox4x32(kernels::philox_counter(8), key);
  CHECK(b1 != b3);
  const auto b4 = kernels::philox4x32(kernels::philox_counter(7),
                                      kernels::philox_key_from_seed(1));
  CHECK(b1 != b4);
}

TEST_CASE("philox: output words are unbiased at the bit level") {
  const kernels::PhiloxKey key = kernels::philox_key_from_seed(42);
  // mean population count over many blocks should be very close to 64
  const int blocks = 20000;
  double bitsum = 0.0;
  for (int i = 0; i < blocks; ++i) {
    const auto blk = kernels::philox4x32(kernels::philox_counter(i), key);
    for (std::uint32_t w : blk) bitsum += __builtin_popcount(w);
  }
  const double mean = bitsum / blocks;  // expect 64, sd = sqrt(32/blocks) ~ 0.04
  CHECK(std::fabs(mean - 64.0) < 0.25);
}

TEST_CASE("norm_log matches libm") {
  oracles::TestRng rng(11);
  double worst = 0.0;
  for (int i = 0; i < 20000; ++i) {
    double u = rng.uniform(0.0, 1.0);
    if (u <= 0.0) continue;
    const double got = kernels::norm_log(u);
    const double want = std::log(u);
    worst = std::max(worst, std::fabs(got - want) / (1.0 + std::fabs(want)));
  }
  // a couple of ulp; libm itself is ~0.5 ulp
  CHECK(worst < 1e-15);
  // the denormal-free extremes of the sampler's domain
  CHECK(kernels::norm_log(0x1p-53) ==
        doctest::Approx(std::log(0x1p-53)).epsilon(1e-15));
  CHECK(kernels::norm_log(1.0 - 0x1p-53) ==
        doctest::Approx(std::log(1.0 - 0x1p-53)).epsilon(1e-10));
}

TEST_CASE("norm_sincos matches libm on [0, 2pi)") {
  oracles::TestRng rng(12);
  double worst = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double th = rng.uniform(0.0, kernels::kTwoPi * (1.0 - 1e-16));
    double s, c;
    kernels::norm_sincos(th, s, c);
    worst = std::max(worst, std::fabs(s - std::sin(th)));
    worst = std::max(worst, std::fabs(c - std::cos(th)));
    CHECK(std::fabs(s * s + c * c - 1.0) < 4e-16);
  }
  CHECK(worst < 1e-15);
  double s, c;
  kernels::norm_sincos(0.0, s, c);
  CHECK(s == 0.0);
  CHECK(c == 1.0);
}

TEST_CASE("gaussian stream: moments and tail mass of N(0,1) pairs") {
  const std::size_t n = 1u << 20;
  std::vector<double> zx(n), zp(n);
  kernels::scalar_ops().gaussian_fill(2024, 0, n, 1.0, 1.0, zx.data(), zp.data());

  double sx = 0, sxx = 0, sp = 0, spp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += zx[i];
    sxx += zx[i] * zx[i];
    sp += zp[i];
    spp += zp[i] * zp[i];
  }
  const double inv = 1.0 / double(n);
  const double se_mean = std::sqrt(inv);            // sd of the sample mean
  CHECK(std::fabs(sx * inv) < 5 * se_mean);
  CHECK(std::fabs(sp * inv) < 5 * se_mean);
  const double se_var = std::sqrt(2.0 * inv);       // sd of the sample variance
  CHECK(std::fabs(sxx * inv - 1.0) < 5 * se_var);
  CHECK(std::fabs(spp * inv - 1.0) < 5 * se_var);

  // P(|Z| > 1) = erfc(1/sqrt(2)) = 0.31731...
  const double frac =
      double(kernels::scalar_ops().count_beyond(zx.data(), n, 1.0)) * inv;
  const double want = 0.3173105078629141;
  const double se = std::sqrt(want * (1 - want) * inv);
  CHECK(std::fabs(frac - want) < 5 * se);

  // x and p draws come from independent sub-streams
  double sxp = 0;
  for (std::size_t i = 0; i < n; ++i) sxp += zx[i] * zp[i];
  CHECK(std::fabs(sxp * inv) < 5 * se_mean);
}

TEST_CASE("scalar and AVX2 backends produce bit-identical streams") {
  const kernels::Ops* simd = kernels::avx2_ops();
  if (simd == nullptr) {
    MESSAGE("AVX2 backend unavailable on this host; equivalence not exercised");
    return;
  }
  const kernels::Ops& ref = kernels::scalar_ops();

  for (std::size_t n : {std::size_t(1), std::size_t(2), std::size_t(3),
                        std::size_t(4), std::size_t(5), std::size_t(7),
                        std::size_t(8), std::size_t(33), std::size_t(1000),
                        std::size_t(10001)}) {
    std::vector<double> ax(n), ap(n), bx(n), bp(n);
    ref.gaussian_fill(99, 1234, n, 0.7071, 1.4142, ax.data(), ap.data());
    simd->gaussian_fill(99, 1234, n, 0.7071, 1.4142, bx.data(), bp.data());
    CHECK(std::memcmp(ax.data(), bx.data(), n * sizeof(double)) == 0);
    CHECK(std::memcmp(ap.data(), bp.data(), n * sizeof(double)) == 0);

    // rotation stays in lockstep over repeated application
    for (int rep = 0; rep < 3; ++rep) {
      ref.rotate(ax.data(), ap.data(), n, 0.8, 0.6, 2.5, 0.4);
      simd->rotate(bx.data(), bp.data(), n, 0.8, 0.6, 2.5, 0.4);
    }
    CHECK(std::memcmp(ax.data(), bx.data(), n * sizeof(double)) == 0);
    CHECK(std::memcmp(ap.data(), bp.data(), n * sizeof(double)) == 0);

    for (double thr : {0.1, 0.9, 2.3}) {
      CHECK(ref.count_beyond(ax.data(), n, thr) ==
            simd->count_beyond(bx.data(), n, thr));
    }
  }
}

TEST_CASE("count_beyond agrees with a naive loop") {
  oracles::TestRng rng(13);
  std::vector<double> v(2049);
  for (double& d : v) d = rng.uniform(-3.0, 3.0);
  for (const kernels::Ops* ops : {&kernels::scalar_ops(), kernels::avx2_ops()}) {
    if (ops == nullptr) continue;
    for (double thr : {0.0, 0.5, 1.7, 10.0}) {
      std::size_t naive = 0;
      for (double d : v)
        if (std::fabs(d) > thr) ++naive;
      CHECK(ops->count_beyond(v.data(), v.size(), thr) == naive);
    }
  }
}

TEST_CASE("gaussian_fill: counter indexing makes chunked fills equal one pass") {
  const kernels::Ops& ops = kernels::active_ops();
  const std::size_t n = 1000;
  std::vector<double> x1(n), p1(n), x2(n), p2(n);
  ops.gaussian_fill(7, 0, n, 1.0, 2.0, x1.data(), p1.data());
  // same stream assembled from three uneven chunks
  ops.gaussian_fill(7, 0, 100, 1.0, 2.0, x2.data(), p2.data());
  ops.gaussian_fill(7, 100, 431, 1.0, 2.0, x2.data() + 100, p2.data() + 100);
  ops.gaussian_fill(7, 531, n - 531, 1.0, 2.0, x2.data() + 531, p2.data() + 531);
  CHECK(std::memcmp(x1.data(), x2.data(), n * sizeof(double)) == 0);
  CHECK(std::memcmp(p1.data(), p2.data(), n * sizeof(double)) == 0);
}
