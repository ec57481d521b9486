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

#ifndef PHASETAIL_ENSEMBLE_HPP
#define PHASETAIL_ENSEMBLE_HPP

#include <cstdint>
#include <vector>

#include "phasetail/phasespace.hpp"

namespace phasetail::ensemble {

/// Seeded array of classical phase-space points.  Reproducible: identical
/// (seed, size, source) give bit-identical points on any backend and for any
/// worker count (points are indexed into the counter space of the generator).
struct EnsembleSample {
  std::vector<double> x;
  std::vector<double> p;
  std::uint64_t seed = 0;
  phasespace::PhaseSpaceGaussian source;
  double time = 0.0;  // accumulated flow time since sampling

  std::size_t size() const { return x.size(); }
};

/// i.i.d. draws x ~ N(0, sigma_x^2), p ~ N(0, sigma_p^2).  Rejects n = 0.
EnsembleSample sample(const phasespace::PhaseSpaceGaussian& F, std::size_t n,
                      std::uint64_t seed);

/// Exact harmonic flow over time t:
///   x(t) = x cos(wt) + (p/mw) sin(wt),  p(t) = p cos(wt) - mw x sin(wt).
EnsembleSample evolve(const EnsembleSample& s, double t);

/// Empirical tail fractions with their binomial standard errors, paired with
/// the analytic tails of the source distribution.
struct TailReport {
  double pr_q_analytic = 0.0;   // two-sided mass of |x| > x_ret
  double pr_cl_analytic = 0.0;  // two-sided mass of |p| > p0
  double frac_beyond_x = 0.0;
  double stderr_x = 0.0;
  double frac_beyond_p = 0.0;
  double stderr_p = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  double x_ret = 0.0;
  double p0 = 0.0;
  double mean_energy = 0.0;  // sample mean of p^2/2m + C^2 x^2/2

  bool within_band(double k) const;
};

/// Rejects empty samples and non-positive thresholds.
TailReport tail_fractions(const EnsembleSample& s, double x_ret, double p0);

/// Tail fractions of the evolved ensemble at a list of times, each compared
/// against the t = 0 analytic values in units of the binomial standard error.
struct StationarityEntry {
  double t = 0.0;
  double frac_x = 0.0;
  double frac_p = 0.0;
  double dev_x = 0.0;  // (frac - analytic) / stderr
  double dev_p = 0.0;
};

struct StationarityReport {
  std::vector<StationarityEntry> entries;
  double pr_x_analytic = 0.0;
  double pr_p_analytic = 0.0;
  double max_abs_dev = 0.0;
  bool pass = false;  // every |dev| within the tolerance band
};

StationarityReport stationarity_check(const phasespace::PhaseSpaceGaussian& F,
                                      std::size_t n, std::uint64_t seed,
                                      const std::vector<double>& times,
                                      double x_ret, double p0,
                                      double stderr_band = 4.0);

/// Sample moments (compensated summation).
struct Moments {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  double mean_energy = 0.0;
};

Moments moments(const EnsembleSample& s);

}  // namespace phasetail::ensemble

#endif
