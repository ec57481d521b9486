#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "phasetail/oscillator.hpp"
#include "phasetail/specfun.hpp"

using namespace phasetail;
using oscillator::OscillatorConfig;
using oscillator::QuantumState;

namespace {

// Test-side normalisation oracle: integrate psi_m psi_n with Gauss-Hermite
// applied to the raw polynomials and log-space constants -- independent of
// the scaled recurrence inside eigenfunction().
double overlap_oracle(int m, int n, const OscillatorConfig& cfg) {
  static const auto rule = specfun::gauss_hermite(64);
  const double lognorm = -0.5 * ((m + n) * std::log(2.0) + std::lgamma(m + 1.0) +
                                 std::lgamma(n + 1.0)) -
                         0.5 * std::log(M_PI);
  double sum = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    sum += rule.weights[i] * specfun::hermite(m, rule.nodes[i]) *
           specfun::hermite(n, rule.nodes[i]);
  }
  (void)cfg;  // the alpha factors cancel in the xi substitution
  return sum * std::exp(lognorm);
}

}  // namespace

TEST_CASE("config: derived constants and their identities") {
  const auto cfg = OscillatorConfig::natural();
  CHECK(cfg.omega == 1.0);
  CHECK(cfg.alpha == 1.0);
  CHECK(cfg.nu == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-15));

  oracles::TestRng rng(21);
  for (int i = 0; i < 200; ++i) {
    const OscillatorConfig c(rng.log_uniform(1e-2, 1e2),
                             rng.log_uniform(1e-2, 1e2),
                             rng.log_uniform(1e-2, 1e2));
    // alpha hbar = C sqrt(m)
    const double lhs = c.alpha * c.hbar;
    const double rhs = c.C * std::sqrt(c.m);
    CHECK(std::fabs(lhs - rhs) <= 5e-16 * rhs);
    // omega^2 m = C^2
    CHECK(std::fabs(c.omega * c.omega * c.m - c.C * c.C) <= 5e-16 * c.C * c.C);
  }
  CHECK_THROWS_AS(OscillatorConfig(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(OscillatorConfig(1.0, -2.0, 1.0), std::invalid_argument);
}

TEST_CASE("energy: ladder (n + 1/2) h nu") {
  const auto cfg = OscillatorConfig::natural();
  CHECK(oscillator::energy(0, cfg) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(oscillator::energy(3, cfg) == doctest::Approx(3.5).epsilon(1e-15));

  const OscillatorConfig c(2.0, 3.0, 0.7);
  const double hnu = 2.0 * M_PI * c.hbar * c.nu;
  for (int n = 0; n < 50; ++n) {
    const double gap = oscillator::energy(n + 1, c) - oscillator::energy(n, c);
    CHECK(gap == doctest::Approx(hnu).epsilon(1e-12));
  }
}

TEST_CASE("eigenfunction: ground and first excited anchors") {
  const QuantumState g(0, OscillatorConfig::natural());
  CHECK(oscillator::eigenfunction(g, 0.0) ==
        doctest::Approx(0.7511255444649425).epsilon(1e-14));
  const QuantumState e1(1, OscillatorConfig(3.0, 0.5, 1.1));
  CHECK(oscillator::eigenfunction(e1, 0.0) == 0.0);

  // n = 0 normalisation against the quadrature oracle
  CHECK(overlap_oracle(0, 0, g.config) == doctest::Approx(1.0).epsilon(1e-12));
  const double quad = specfun::integrate_adaptive(
      [&](double x) { return oscillator::density(g, x); }, -9.0, 9.0, 1e-12);
  CHECK(quad == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("eigenfunction: normalisation and orthogonality, n <= 20") {
  const OscillatorConfig cfg(1.7, 0.9, 1.3);
  static const auto rule = specfun::gauss_hermite(64);

  for (int n = 0; n <= 20; ++n) {
    // quadrature over the eigenfunction itself (xi = sqrt(alpha) x)
    const QuantumState st(n, cfg);
    double norm = 0.0;
    for (int i = 0; i < rule.order; ++i) {
      const double xi = rule.nodes[i];
      const double psi = oscillator::eigenfunction(st, xi / std::sqrt(cfg.alpha));
      norm += rule.weights[i] * std::exp(xi * xi) * psi * psi;
    }
    norm /= std::sqrt(cfg.alpha);
    CHECK(std::fabs(norm - 1.0) <= 1e-8);
    // independent raw-polynomial oracle agrees
    CHECK(std::fabs(overlap_oracle(n, n, cfg) - 1.0) <= 1e-10);
  }
  for (int m = 0; m <= 10; ++m)
    for (int n = m + 1; n <= 10; ++n)
      CHECK(std::fabs(overlap_oracle(m, n, cfg)) <= 1e-10);
}

TEST_CASE("density: closed-form anchors and positivity/parity") {
  const QuantumState g(0, OscillatorConfig::natural());
  CHECK(oscillator::density(g, 0.0) ==
        doctest::Approx(0.5641895835477563).epsilon(1e-13));
  CHECK(oscillator::density(g, 1.0) ==
        doctest::Approx(0.2075537487102974).epsilon(1e-13));

  oracles::TestRng rng(22);
  for (int n = 0; n <= 8; ++n) {
    const QuantumState st(n, OscillatorConfig(1.3, 2.1, 0.9));
    for (int i = 0; i < 50; ++i) {
      const double x = rng.uniform(-6.0, 6.0);
      const double d = oscillator::density(st, x);
      CHECK(d >= 0.0);
      CHECK(d == oscillator::density(st, -x));  // exact parity
    }
  }
}

TEST_CASE("quantum state: order cap") {
  const auto cfg = OscillatorConfig::natural();
  CHECK_THROWS_AS(QuantumState(-1, cfg), std::invalid_argument);
  CHECK_THROWS_AS(QuantumState(129, cfg), std::invalid_argument);
  const QuantumState big(128, cfg);
  CHECK(std::isfinite(oscillator::eigenfunction(big, 0.37)));
}

TEST_CASE("turning_points: both closed-form expressions stay consistent") {
  const auto cfg = OscillatorConfig::natural();
  const auto tp1 = oscillator::turning_points(1.0, cfg);
  CHECK(tp1.x_ret == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const auto tp_paper = oscillator::turning_points(oscillator::paper_h0(cfg), cfg);
  CHECK(tp_paper.x_ret == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(tp_paper.p0 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const auto tp_ground = oscillator::turning_points(oscillator::energy(0, cfg), cfg);
  CHECK(tp_ground.x_ret == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(tp_ground.p0 == doctest::Approx(1.0).epsilon(1e-15));

  oracles::TestRng rng(23);
  for (int i = 0; i < 300; ++i) {
    const OscillatorConfig c(rng.log_uniform(1e-2, 1e2),
                             rng.log_uniform(1e-2, 1e2),
                             rng.log_uniform(1e-2, 1e2));
    const double H0 = rng.log_uniform(1e-2, 1e2);
    const auto tp = oscillator::turning_points(H0, c);
    const double alt = tp.p0 / (std::sqrt(c.m) * c.C);
    CHECK(std::fabs(tp.x_ret - alt) <= 1e-12 * tp.x_ret);
  }
  CHECK_THROWS_AS(oscillator::turning_points(0.0, cfg), std::invalid_argument);
  CHECK_THROWS_AS(oscillator::turning_points(-1.0, cfg), std::invalid_argument);
}

TEST_CASE("quantum_tail_probability: ground-state anchors") {
  const QuantumState g(0, OscillatorConfig::natural());
  CHECK(oscillator::quantum_tail_probability(g, std::sqrt(2.0)) ==
        doctest::Approx(0.0455002638963584).epsilon(1e-10));
  CHECK(oscillator::quantum_tail_probability(g, 1.0) ==
        doctest::Approx(0.1572992070502851).epsilon(1e-10));
  CHECK(oscillator::quantum_tail_probability(g, 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(oscillator::quantum_tail_probability(g, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(oscillator::quantum_tail_probability(g, -0.5),
                  std::invalid_argument);
}

TEST_CASE("quantum_tail_probability: closed form vs direct quadrature, n = 0") {
  oracles::TestRng rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const OscillatorConfig c(rng.log_uniform(0.1, 10.0),
                             rng.log_uniform(0.1, 10.0),
                             rng.log_uniform(0.1, 10.0));
    const QuantumState g(0, c);
    const double sa = std::sqrt(c.alpha);
    for (int k = 0; k < 8; ++k) {
      const double x_ret = std::pow(10.0, -3.0 + 4.0 * k / 7.0) / sa;
      const double closed = oscillator::quantum_tail_probability(g, x_ret);
      // the defining tail integral evaluated with a naive integrator
      const double upper = x_ret + 12.0 / sa;
      const double direct =
          2.0 * oracles::simpson(
                    [&](double x) { return oscillator::density(g, x); }, x_ret,
                    upper, 20000);
      CHECK(std::fabs(closed - direct) <= 1e-9);
      if (closed > 1e-6)
        CHECK(std::fabs(closed - direct) <= 1e-9 * closed + 1e-12);
    }
  }
}

TEST_CASE("quantum_tail_probability: excited states vs naive integration") {
  const OscillatorConfig cfg(1.4, 0.8, 1.0);
  const double sa = std::sqrt(cfg.alpha);
  for (int n : {1, 2, 5, 10}) {
    const QuantumState st(n, cfg);
    for (double scale : {0.5, 1.0, 2.0, 3.5}) {
      const double x_ret = scale / sa;
      const double got = oscillator::quantum_tail_probability(st, x_ret);
      const double upper = (std::sqrt(2.0 * n + 1.0) + 10.0) / sa;
      const double want =
          2.0 * oracles::simpson(
                    [&](double x) { return oscillator::density(st, x); }, x_ret,
                    upper, 40000);
      CHECK(std::fabs(got - want) <= 1e-8);
      CHECK(got >= 0.0);
      CHECK(got <= 1.0);
    }
  }
}

TEST_CASE("quantum_tail_probability: monotone decreasing in x_ret") {
  const OscillatorConfig cfg = OscillatorConfig::natural();
  for (int n : {0, 1, 2, 3}) {
    const QuantumState st(n, cfg);
    double prev = 1.0 + 1e-9;
    for (int k = 0; k <= 30; ++k) {
      const double x_ret = 1e-3 * std::pow(10.0 / 1e-3, k / 30.0);
      const double tail = oscillator::quantum_tail_probability(st, x_ret);
      CHECK(tail <= prev + 1e-11);
      if (tail > 1e-12) CHECK(tail < prev);
      prev = tail;
    }
  }
}
