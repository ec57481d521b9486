// Test-only reference implementations, kept independent of the library code
// paths they are used to check.

#ifndef PHASETAIL_TESTS_ORACLES_HPP
#define PHASETAIL_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace oracles {

// erf by the Maclaurin series 2/sqrt(pi) * sum (-1)^k x^{2k+1} / (k! (2k+1)),
// summed in long double until the terms stop contributing.  Cancellation
// limits the usable range to |x| <~ 4.
inline long double erf_series(long double x) {
  const long double two_over_sqrt_pi = 1.1283791670955125738961589031215452L;
  long double term = x;  // x^{2k+1} / k!
  long double sum = x;
  for (int k = 1; k < 400; ++k) {
    term *= -x * x / k;
    const long double contrib = term / (2 * k + 1);
    sum += contrib;
    if (std::fabs(contrib) < 1e-25L * std::fabs(sum)) break;
  }
  return two_over_sqrt_pi * sum;
}

// erfc by the Legendre continued fraction (modified Lentz), accurate for
// x >~ 1.5 where the series oracle starts losing digits.
inline long double erfc_cf(long double x) {
  const long double inv_sqrt_pi = 0.5641895835477562869480794515607726L;
  const long double tiny = 1e-40L;
  long double f = x, c = x, d = 0.0L;
  for (int k = 1; k < 400; ++k) {
    const long double a = k * 0.5L;
    // CF: erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + a1/(x + a2/(x + ...)))
    d = x + a * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0L) < 1e-22L) break;
  }
  return std::exp(-x * x) * inv_sqrt_pi / f;
}

// Explicit physicists' Hermite polynomials up to n = 6 from the hand-checked
// coefficient tables.
inline double hermite_explicit(int n, double x) {
  const double x2 = x * x;
  switch (n) {
    case 0: return 1.0;
    case 1: return 2.0 * x;
    case 2: return 4.0 * x2 - 2.0;
    case 3: return x * (8.0 * x2 - 12.0);
    case 4: return (16.0 * x2 - 48.0) * x2 + 12.0;
    case 5: return x * ((32.0 * x2 - 160.0) * x2 + 120.0);
    case 6: return ((64.0 * x2 - 480.0) * x2 + 720.0) * x2 - 120.0;
    default: throw std::invalid_argument("hermite_explicit: n > 6");
  }
}

// Composite Simpson integration, deliberately naive: a method-independent
// cross-check for the library's Gauss panels.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i)
    sum += f(a + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// (2j-1)!! with (-1)!! = 1.
inline double double_factorial_odd(int j) {
  double r = 1.0;
  for (int k = 2 * j - 1; k > 1; k -= 2) r *= k;
  return r;
}

// Small deterministic generator for test inputs (SplitMix64), independent of
// the library's counter-based stream.
struct TestRng {
  std::uint64_t state;
  explicit TestRng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    const double u = double(next_u64() >> 11) * 0x1p-53;
    return lo + (hi - lo) * u;
  }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
};

}  // namespace oracles

#endif
