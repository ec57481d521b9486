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

#include "phasetail/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "phasetail/barrier.hpp"
#include "phasetail/ensemble.hpp"
#include "phasetail/kernels/philox.hpp"
#include "phasetail/oscillator.hpp"
#include "phasetail/phasespace.hpp"
#include "phasetail/specfun.hpp"

namespace phasetail::checks {

namespace {

using oscillator::OscillatorConfig;
using oscillator::QuantumState;
namespace ps = phasetail::phasespace;
namespace ens = phasetail::ensemble;
namespace br = phasetail::barrier;

// frozen targets (closed forms 1 - erf(sqrt(2)) and 1 - erf(1))
constexpr double kPrPaper = 0.0455002639;
constexpr double kPrGround = 0.1572992071;

// Deterministic draws for randomized checks, on top of the library's own
// counter-based generator.
struct CheckRng {
  std::uint64_t counter = 0;
  kernels::PhiloxKey key;
  explicit CheckRng(std::uint64_t seed)
      : key(kernels::philox_key_from_seed(seed)) {}
  double uniform01() {
    const auto blk = kernels::philox4x32(kernels::philox_counter(counter++), key);
    const std::uint64_t u = (std::uint64_t(blk[1]) << 32) | blk[0];
    return double(u >> 11) * 0x1p-53;
  }
  double log_uniform(double lo, double hi) {
    return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * uniform01());
  }
};

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string fmt(double v) {
  std::ostringstream o;
  o.precision(3);
  o << v;
  return o.str();
}

CheckResult check_equivalence_identity() {
  Timer timer;
  CheckResult r{1, "equivalence identity pr_Q = pr_cl (1000 random configs)",
                false, "", 0.0, 1.0};
  CheckRng rng(101);
  double worst_residual = 0.0, worst_pr = 0.0;
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const OscillatorConfig cfg(rng.log_uniform(1e-2, 1e2),
                               rng.log_uniform(1e-2, 1e2),
                               rng.log_uniform(1e-2, 1e2));
    const double H0 = rng.log_uniform(1e-2, 1e2);
    const auto rep = ps::check_equivalence(cfg, H0);
    const double res_rel = rep.residual / std::max(rep.lhs, rep.rhs);
    worst_residual = std::max(worst_residual, res_rel);
    if (res_rel > 1e-12) ok = false;
    const double scale = std::max(rep.pr_quantum, rep.pr_classical);
    const double pr_rel =
        scale > 0.0 ? std::fabs(rep.pr_quantum - rep.pr_classical) / scale : 0.0;
    worst_pr = std::max(worst_pr, pr_rel);
    if (pr_rel > 1e-12) ok = false;
  }
  r.seconds = timer.elapsed();
  r.pass = ok && r.seconds < r.budget_seconds;
  r.detail = "max rel residual " + fmt(worst_residual) + ", max rel |pr_Q-pr_cl| " +
             fmt(worst_pr);
  return r;
}

CheckResult check_headline_values() {
  Timer timer;
  CheckResult r{2, "headline tails: 1-erf(sqrt2) and 1-erf(1) conventions",
                false, "", 0.0, 1.0};
  const auto cfg = OscillatorConfig::natural();
  const QuantumState g(0, cfg);

  const auto tp_paper = oscillator::turning_points(oscillator::paper_h0(cfg), cfg);
  const double pr_paper = oscillator::quantum_tail_probability(g, tp_paper.x_ret);
  const auto tp_ground =
      oscillator::turning_points(oscillator::energy(0, cfg), cfg);
  const double pr_ground = oscillator::quantum_tail_probability(g, tp_ground.x_ret);

  // cross-validation by direct quadrature of the density beyond x_ret
  const auto direct_tail = [&](double x_ret) {
    return 2.0 * specfun::integrate_adaptive(
                     [&](double x) { return oscillator::density(g, x); }, x_ret,
                     x_ret + 14.0, 1e-11);
  };
  const double quad_paper = direct_tail(tp_paper.x_ret);
  const double quad_ground = direct_tail(tp_ground.x_ret);

  const bool ok = std::fabs(pr_paper - kPrPaper) <= 1e-9 &&
                  std::fabs(pr_ground - kPrGround) <= 1e-9 &&
                  std::fabs(pr_paper - quad_paper) <= 1e-9 &&
                  std::fabs(pr_ground - quad_ground) <= 1e-9;
  r.seconds = timer.elapsed();
  r.pass = ok && r.seconds < r.budget_seconds;
  r.detail = "paper " + fmt(pr_paper) + " (quad dev " +
             fmt(std::fabs(pr_paper - quad_paper)) + "), ground " +
             fmt(pr_ground) + " (quad dev " +
             fmt(std::fabs(pr_ground - quad_ground)) + ")";
  return r;
}

CheckResult check_mc_realization() {
  Timer timer;
  CheckResult r{3, "Monte Carlo tails reach the analytic values (N = 10^6)",
                false, "", 0.0, 10.0};
  const auto cfg = OscillatorConfig::natural();
  const auto F = ps::ground_state_distribution(cfg);
  const auto tp = oscillator::turning_points(oscillator::paper_h0(cfg), cfg);
  const auto s = ens::sample(F, 1000000, 20260811);
  const auto rep = ens::tail_fractions(s, tp.x_ret, tp.p0);

  const double dev_x = std::fabs(rep.frac_beyond_x - rep.pr_q_analytic);
  const double dev_p = std::fabs(rep.frac_beyond_p - rep.pr_cl_analytic);
  const double joint =
      std::hypot(rep.stderr_x, rep.stderr_p);
  const bool ok = dev_x <= 4.0 * rep.stderr_x && dev_p <= 4.0 * rep.stderr_p &&
                  std::fabs(rep.frac_beyond_x - rep.frac_beyond_p) <= 4.0 * joint;
  r.seconds = timer.elapsed();
  r.pass = ok && r.seconds < r.budget_seconds;
  r.detail = "frac_x " + fmt(rep.frac_beyond_x) + " (" +
             fmt(dev_x / rep.stderr_x) + " se), frac_p " +
             fmt(rep.frac_beyond_p) + " (" + fmt(dev_p / rep.stderr_p) + " se)";
  return r;
}

CheckResult check_stationarity() {
  Timer timer;
  CheckResult r{4, "Liouville stationarity of the ground-state ensemble",
                false, "", 0.0, 30.0};
  const auto cfg = OscillatorConfig::natural();
  const auto F = ps::ground_state_distribution(cfg);
  const auto tp = oscillator::turning_points(oscillator::paper_h0(cfg), cfg);
  const double period = 2.0 * M_PI / cfg.omega;

  CheckRng rng(404);
  std::vector<double> times;
  for (int i = 0; i < 10; ++i) times.push_back(rng.uniform01() * 3.0 * period);

  const auto rep =
      ens::stationarity_check(F, 200000, 500, times, tp.x_ret, tp.p0);

  // negative control: sigma_p doubled must visibly fail at the quarter turn
  const auto bad = ps::scaled_distribution(cfg, F.sigma_x, 2.0 * F.sigma_p);
  const auto ctrl = ens::stationarity_check(
      bad, 200000, 516, {0.5 * M_PI / cfg.omega}, tp.x_ret, tp.p0);

  const bool ok = rep.pass && ctrl.entries[0].dev_x > 10.0;
  r.seconds = timer.elapsed();
  r.pass = ok && r.seconds < r.budget_seconds;
  r.detail = "max |dev| " + fmt(rep.max_abs_dev) + " se over 10 times; control dev " +
             fmt(ctrl.entries[0].dev_x) + " se";
  return r;
}

CheckResult check_wigner() {
  Timer timer;
  CheckResult r{5, "Wigner field: ground-state Gaussian, marginal, n=1 origin",
                false, "", 0.0, 10.0};
  const auto cfg = OscillatorConfig::natural();
  const QuantumState g(0, cfg);
  const auto F = ps::ground_state_distribution(cfg);

  const auto xg = ps::uniform_grid(-4.0 * F.sigma_x, 4.0 * F.sigma_x, 101);
  const auto pg = ps::uniform_grid(-4.0 * F.sigma_p, 4.0 * F.sigma_p, 101);
  const auto field = ps::wigner_transform(g, xg, pg);
  double grid_dev = 0.0;
  for (std::size_t ix = 0; ix < xg.size(); ++ix)
    for (std::size_t ip = 0; ip < pg.size(); ++ip)
      grid_dev = std::max(grid_dev,
                          std::fabs(field.at(ix, ip) - F.value(xg[ix], pg[ip])));

  double marg_dev = 0.0;
  const double pmax = 9.0 * F.sigma_p;
  for (std::size_t ix = 0; ix < xg.size(); ix += 2) {
    const double x = xg[ix];
    const double marg = specfun::integrate_adaptive(
        [&](double p) { return ps::wigner_point(g, x, p); }, -pmax, pmax, 1e-10);
    marg_dev = std::max(marg_dev, std::fabs(marg - oscillator::density(g, x)));
  }

  const QuantumState e1(1, cfg);
  const double origin = ps::wigner_point(e1, 0.0, 0.0);
  const double origin_dev = std::fabs(origin - (-1.0 / (M_PI * cfg.hbar)));

  const bool ok = grid_dev <= 1e-10 && marg_dev <= 1e-8 && origin_dev <= 1e-8 &&
                  origin < 0.0;
  r.seconds = timer.elapsed();
  r.pass = ok && r.seconds < r.budget_seconds;
  r.detail = "grid dev " + fmt(grid_dev) + ", marginal dev " + fmt(marg_dev) +
             ", n=1 origin dev " + fmt(origin_dev);
  return r;
}

CheckResult check_oscillator_hygiene() {
  Timer timer;
  CheckResult r{6, "eigenfunction normalisation and orthogonality, n <= 20",
                false, "", 0.0, 5.0};
  const OscillatorConfig cfg(1.3, 0.7, 1.1);
  const auto rule = specfun::gauss_hermite(64);
  const double sa = std::sqrt(cfg.alpha);

  double worst = 0.0;
  for (int mth = 0; mth <= 20; ++mth) {
    const QuantumState sm(mth, cfg);
    for (int nth = mth; nth <= 20; ++nth) {
      const QuantumState sn(nth, cfg);
      double overlap = 0.0;
      for (int i = 0; i < rule.order; ++i) {
        const double xi = rule.nodes[i];
        overlap += rule.weights[i] * std::exp(xi * xi) *
                   oscillator::eigenfunction(sm, xi / sa) *
                   oscillator::eigenfunction(sn, xi / sa);
      }
      overlap /= sa;
      const double want = (mth == nth) ? 1.0 : 0.0;
      worst = std::max(worst, std::fabs(overlap - want));
    }
  }
  r.seconds = timer.elapsed();
  r.pass = worst <= 1e-8 && r.seconds < r.budget_seconds;
  r.detail = "max |<m|n> - delta_mn| = " + fmt(worst) + " over 231 pairs";
  return r;
}

CheckResult check_barrier_limit() {
  Timer timer;
  CheckResult r{7, "smooth admissible barriers recover the square limit",
                false, "", 0.0, 30.0};
  const double V0 = 1.0, b = 0.0, c = 1.0, E = 0.5;
  bool ok = true;
  std::ostringstream detail;

  const auto closed = br::square_transmission(V0, b, c, E, 1.0, 1.0);
  const auto sq = br::square_profile(V0, b, c);
  double exactness = 0.0;
  for (std::size_t slices : {std::size_t(1), std::size_t(7), std::size_t(64)}) {
    const auto res = br::transfer_matrix(sq, E, 1.0, 1.0, slices);
    exactness = std::max(exactness, std::fabs(res.T - closed.T));
    if (std::fabs(res.T + res.R - 1.0) > 1e-10) ok = false;
  }
  if (exactness > 1e-12) ok = false;

  double prev_dev = 1e300, final_dev = 1e300;
  for (int k = 1; k <= 8; ++k) {
    const double w = (c - b) / std::pow(2.0, k);
    const auto profile = br::smooth_profile(V0, b, c, w);
    const auto raw = br::transfer_matrix(profile, E, 1.0, 1.0, 4096);
    if (std::fabs(raw.T + raw.R - 1.0) > 1e-10) ok = false;
    const auto conv = br::converged_transmission(profile, E, 1.0, 1.0);
    const double dev = std::fabs(conv.T - closed.T);
    if (dev >= prev_dev) ok = false;  // must decrease along the sweep
    prev_dev = dev;
    final_dev = dev;
  }
  if (final_dev > 1e-4) ok = false;

  r.seconds = timer.elapsed();
  r.pass = ok && r.seconds < r.budget_seconds;
  detail << "square exactness " << fmt(exactness) << ", |T(w_min) - T_square| "
         << fmt(final_dev);
  r.detail = detail.str();
  return r;
}

CheckResult check_mc_convergence() {
  Timer timer;
  CheckResult r{8, "Monte Carlo error shrinks like N^{-1/2}", false, "", 0.0,
                60.0};
  const auto cfg = OscillatorConfig::natural();
  const auto F = ps::ground_state_distribution(cfg);
  const auto tp = oscillator::turning_points(oscillator::paper_h0(cfg), cfg);
  const double analytic = ps::classical_tail_probability(F, tp.p0);

  const std::vector<std::size_t> sizes{1000, 10000, 100000, 1000000};
  std::vector<double> lx, ly;
  for (std::size_t n : sizes) {
    double mean_err = 0.0;
    for (std::uint64_t seedoff = 1; seedoff <= 20; ++seedoff) {
      const auto s = ens::sample(F, n, 9000 + seedoff);
      const auto rep = ens::tail_fractions(s, tp.x_ret, tp.p0);
      mean_err += std::fabs(rep.frac_beyond_p - analytic);
    }
    mean_err /= 20.0;
    lx.push_back(std::log(double(n)));
    ly.push_back(std::log(mean_err));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double npts = double(lx.size());
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double slope = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);

  r.seconds = timer.elapsed();
  r.pass = std::fabs(slope + 0.5) <= 0.15 && r.seconds < r.budget_seconds;
  r.detail = "log-log slope " + fmt(slope) + " (want -0.5 +- 0.15, 20 seeds)";
  return r;
}

}  // namespace

std::vector<CheckResult> run_all() {
  return {check_equivalence_identity(), check_headline_values(),
          check_mc_realization(),       check_stationarity(),
          check_wigner(),               check_oscillator_hygiene(),
          check_barrier_limit(),        check_mc_convergence()};
}

}  // namespace phasetail::checks
