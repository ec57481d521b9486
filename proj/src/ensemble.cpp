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

#include "phasetail/ensemble.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "phasetail/kernels/sample_kernels.hpp"
#include "phasetail/specfun.hpp"

namespace phasetail::ensemble {

namespace {

std::size_t worker_count(std::size_t n) {
  if (const char* env = std::getenv("PHASETAIL_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return std::size_t(v);
  }
  if (n < 200000) return 1;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min<std::size_t>(hw, 8);
}

// Contiguous chunks of the counter space: output does not depend on the
// worker count because point i is a pure function of (seed, i).
template <typename Fn>
void parallel_chunks(std::size_t n, const Fn& fn) {
  const std::size_t workers = worker_count(n);
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    if (lo >= n) break;
    const std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi - lo); });
  }
  for (auto& th : pool) th.join();
}

double kahan_sum(const std::vector<double>& v,
                 const std::function<double(double)>& f) {
  double sum = 0.0, comp = 0.0;
  for (double d : v) {
    const double y = f(d) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

EnsembleSample sample(const phasespace::PhaseSpaceGaussian& F, std::size_t n,
                      std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample: n must be >= 1");
  EnsembleSample s{std::vector<double>(n), std::vector<double>(n), seed, F, 0.0};
  const kernels::Ops& ops = kernels::active_ops();
  double* xs = s.x.data();
  double* ps = s.p.data();
  const double sx = F.sigma_x;
  const double sp = F.sigma_p;
  parallel_chunks(n, [&ops, seed, sx, sp, xs, ps](std::size_t lo, std::size_t len) {
    ops.gaussian_fill(seed, lo, len, sx, sp, xs + lo, ps + lo);
  });
  return s;
}

EnsembleSample evolve(const EnsembleSample& s, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("evolve: t must be finite");
  EnsembleSample out = s;
  const auto& cfg = s.source.config;
  const double c = std::cos(cfg.omega * t);
  const double sn = std::sin(cfg.omega * t);
  const double momega = cfg.m * cfg.omega;
  const double inv_momega = 1.0 / momega;
  const kernels::Ops& ops = kernels::active_ops();
  double* xs = out.x.data();
  double* ps = out.p.data();
  parallel_chunks(out.size(), [&ops, xs, ps, c, sn, momega,
                               inv_momega](std::size_t lo, std::size_t len) {
    ops.rotate(xs + lo, ps + lo, len, c, sn, momega, inv_momega);
  });
  out.time = s.time + t;
  return out;
}

bool TailReport::within_band(double k) const {
  return std::fabs(frac_beyond_x - pr_q_analytic) <= k * stderr_x &&
         std::fabs(frac_beyond_p - pr_cl_analytic) <= k * stderr_p;
}

TailReport tail_fractions(const EnsembleSample& s, double x_ret, double p0) {
  if (s.size() == 0) throw std::invalid_argument("tail_fractions: empty sample");
  if (!(x_ret > 0.0) || !(p0 > 0.0))
    throw std::invalid_argument("tail_fractions: thresholds must be positive");

  const kernels::Ops& ops = kernels::active_ops();
  const std::size_t n = s.size();
  const std::size_t cx = ops.count_beyond(s.x.data(), n, x_ret);
  const std::size_t cp = ops.count_beyond(s.p.data(), n, p0);

  TailReport rep;
  rep.n_samples = n;
  rep.seed = s.seed;
  rep.x_ret = x_ret;
  rep.p0 = p0;
  rep.frac_beyond_x = double(cx) / double(n);
  rep.frac_beyond_p = double(cp) / double(n);
  rep.stderr_x =
      std::sqrt(rep.frac_beyond_x * (1.0 - rep.frac_beyond_x) / double(n));
  rep.stderr_p =
      std::sqrt(rep.frac_beyond_p * (1.0 - rep.frac_beyond_p) / double(n));

  // analytic two-sided tails of the source Gaussian; for the ground-state
  // construction these equal the quantum and classical tail probabilities
  rep.pr_q_analytic =
      specfun::gaussian_tail(x_ret / (std::sqrt(2.0) * s.source.sigma_x));
  rep.pr_cl_analytic =
      specfun::gaussian_tail(p0 / (std::sqrt(2.0) * s.source.sigma_p));

  rep.mean_energy = moments(s).mean_energy;
  return rep;
}

StationarityReport stationarity_check(const phasespace::PhaseSpaceGaussian& F,
                                      std::size_t n, std::uint64_t seed,
                                      const std::vector<double>& times,
                                      double x_ret, double p0,
                                      double stderr_band) {
  if (n < 10000)
    throw std::invalid_argument("stationarity_check: need n >= 10^4");

  const EnsembleSample base = sample(F, n, seed);
  StationarityReport rep;
  rep.pr_x_analytic =
      specfun::gaussian_tail(x_ret / (std::sqrt(2.0) * F.sigma_x));
  rep.pr_p_analytic =
      specfun::gaussian_tail(p0 / (std::sqrt(2.0) * F.sigma_p));

  for (double t : times) {
    const EnsembleSample moved = evolve(base, t);
    const TailReport tails = tail_fractions(moved, x_ret, p0);
    StationarityEntry e;
    e.t = t;
    e.frac_x = tails.frac_beyond_x;
    e.frac_p = tails.frac_beyond_p;
    const double se_x = std::max(tails.stderr_x, 1e-300);
    const double se_p = std::max(tails.stderr_p, 1e-300);
    e.dev_x = (e.frac_x - rep.pr_x_analytic) / se_x;
    e.dev_p = (e.frac_p - rep.pr_p_analytic) / se_p;
    rep.entries.push_back(e);
    rep.max_abs_dev =
        std::max({rep.max_abs_dev, std::fabs(e.dev_x), std::fabs(e.dev_p)});
  }
  rep.pass = rep.max_abs_dev <= stderr_band;
  return rep;
}

Moments moments(const EnsembleSample& s) {
  const double n = double(s.size());
  Moments m;
  m.mean_x = kahan_sum(s.x, [](double v) { return v; }) / n;
  m.mean_p = kahan_sum(s.p, [](double v) { return v; }) / n;
  const double mx = m.mean_x;
  const double mp = m.mean_p;
  m.var_x = kahan_sum(s.x, [mx](double v) { return (v - mx) * (v - mx); }) / n;
  m.var_p = kahan_sum(s.p, [mp](double v) { return (v - mp) * (v - mp); }) / n;

  const auto& cfg = s.source.config;
  const double half_inv_m = 0.5 / cfg.m;
  const double half_c2 = 0.5 * cfg.C * cfg.C;
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double h = half_inv_m * s.p[i] * s.p[i] + half_c2 * s.x[i] * s.x[i];
    const double y = h - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  m.mean_energy = sum / n;
  return m;
}

}  // namespace phasetail::ensemble
