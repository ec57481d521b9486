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

// phasetail: oscillator tail probabilities, classical phase-space ensembles,
// and barrier scattering from one command line.
//
// Exit codes: 0 success / within tolerance, 1 validation or config error,
// 2 numerical failure (out of tolerance or non-convergence).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "phasetail/barrier.hpp"
#include "phasetail/checks.hpp"
#include "phasetail/ensemble.hpp"
#include "phasetail/phasespace.hpp"
#include "phasetail/runconfig.hpp"

using json = nlohmann::json;
using namespace phasetail;
using cli::format_double;
using cli::H0Convention;
using cli::OutputFormat;
using cli::RunConfig;
namespace ps = phasetail::phasespace;
namespace ens = phasetail::ensemble;
namespace br = phasetail::barrier;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw cli::ConfigError(0, "cannot write output file '" + out_path + "'");
  out << payload;
}

void append_config_comment(std::ostringstream& csv, const RunConfig& cfg) {
  csv << "# m = " << format_double(cfg.m) << "\n";
  csv << "# C = " << format_double(cfg.C) << "\n";
  csv << "# hbar = " << format_double(cfg.hbar) << "\n";
  csv << "# h0 = " << cfg.h0_text() << "\n";
  csv << "# seed = " << cfg.seed << "\n";
  csv << "# samples = " << cfg.n_samples << "\n";
}

json config_json(const RunConfig& cfg) {
  return {{"m", cfg.m},        {"C", cfg.C},
          {"hbar", cfg.hbar},  {"h0", cfg.h0_text()},
          {"seed", cfg.seed},  {"samples", cfg.n_samples}};
}

// ---------------------------------------------------------------- tail ----

struct ConventionRow {
  std::string name;
  double H0, x_ret, p0, pr_quantum, pr_classical, lhs, rhs, residual,
      residual_rel;
};

ConventionRow tail_row(const RunConfig& cfg, const std::string& name,
                       H0Convention which) {
  const auto osc = cfg.make_oscillator();
  const double H0 = cfg.resolve_h0(which);
  const auto tp = oscillator::turning_points(H0, osc);
  const auto rep = ps::check_equivalence(osc, H0);
  ConventionRow row;
  row.name = name;
  row.H0 = H0;
  row.x_ret = tp.x_ret;
  row.p0 = tp.p0;
  row.pr_quantum = rep.pr_quantum;
  row.pr_classical = rep.pr_classical;
  row.lhs = rep.lhs;
  row.rhs = rep.rhs;
  row.residual = rep.residual;
  row.residual_rel = rep.residual / std::max(rep.lhs, rep.rhs);
  return row;
}

int cmd_tail(const RunConfig& cfg, const std::string& out_path) {
  std::vector<ConventionRow> rows;
  rows.push_back(tail_row(cfg, "paper", H0Convention::paper));
  rows.push_back(tail_row(cfg, "ground", H0Convention::ground));
  if (cfg.h0 == H0Convention::explicit_value)
    rows.push_back(tail_row(cfg, cfg.h0_text(), H0Convention::explicit_value));

  bool pass = true;
  for (const auto& row : rows)
    pass = pass && row.residual_rel <= cfg.tol.equivalence_rel;

  std::string payload;
  if (cfg.format == OutputFormat::json) {
    json j;
    j["command"] = "tail";
    j["config"] = config_json(cfg);
    j["selected_convention"] = cfg.h0_text();
    j["tolerance_rel"] = cfg.tol.equivalence_rel;
    j["pass"] = pass;
    for (const auto& row : rows) {
      j["conventions"][row.name] = {
          {"H0", row.H0},
          {"x_ret", row.x_ret},
          {"p0", row.p0},
          {"pr_quantum", row.pr_quantum},
          {"pr_classical", row.pr_classical},
          {"erf_argument_lhs", row.lhs},
          {"erf_argument_rhs", row.rhs},
          {"residual", row.residual},
          {"residual_rel", row.residual_rel}};
    }
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "# phasetail tail report\n";
    append_config_comment(csv, cfg);
    csv << "# tolerance_rel = " << format_double(cfg.tol.equivalence_rel) << "\n";
    csv << "# pass = " << (pass ? "true" : "false") << "\n";
    csv << "convention,H0,x_ret,p0,pr_quantum,pr_classical,erf_argument_lhs,"
           "erf_argument_rhs,residual,residual_rel,selected\n";
    for (const auto& row : rows) {
      csv << row.name << ',' << format_double(row.H0) << ','
          << format_double(row.x_ret) << ',' << format_double(row.p0) << ','
          << format_double(row.pr_quantum) << ','
          << format_double(row.pr_classical) << ',' << format_double(row.lhs)
          << ',' << format_double(row.rhs) << ',' << format_double(row.residual)
          << ',' << format_double(row.residual_rel) << ','
          << (row.name == cfg.h0_text() ? 1 : 0) << "\n";
    }
    payload = csv.str();
  }
  write_output(out_path, payload);
  return pass ? kExitOk : kExitNumerical;
}

// ------------------------------------------------------------ ensemble ----

int cmd_ensemble(const RunConfig& cfg, std::vector<double> times,
                 const std::string& dump_path, const std::string& out_path) {
  const auto osc = cfg.make_oscillator();
  const auto F = ps::ground_state_distribution(osc);
  const double H0 = cfg.resolve_h0();
  const auto tp = oscillator::turning_points(H0, osc);
  if (times.empty()) times.push_back(0.0);

  const auto base = ens::sample(F, cfg.n_samples, cfg.seed);
  const auto mom = ens::moments(base);

  ens::StationarityReport rep;
  rep.pr_x_analytic = ens::tail_fractions(base, tp.x_ret, tp.p0).pr_q_analytic;
  rep.pr_p_analytic = ens::tail_fractions(base, tp.x_ret, tp.p0).pr_cl_analytic;
  for (double t : times) {
    const auto moved = t == 0.0 ? base : ens::evolve(base, t);
    const auto tails = ens::tail_fractions(moved, tp.x_ret, tp.p0);
    ens::StationarityEntry e;
    e.t = t;
    e.frac_x = tails.frac_beyond_x;
    e.frac_p = tails.frac_beyond_p;
    e.dev_x = (e.frac_x - rep.pr_x_analytic) / std::max(tails.stderr_x, 1e-300);
    e.dev_p = (e.frac_p - rep.pr_p_analytic) / std::max(tails.stderr_p, 1e-300);
    rep.entries.push_back(e);
    rep.max_abs_dev =
        std::max({rep.max_abs_dev, std::fabs(e.dev_x), std::fabs(e.dev_p)});
  }
  rep.pass = rep.max_abs_dev <= cfg.tol.mc_stderr_band;
  const double stderr_scale =
      std::sqrt(rep.pr_x_analytic * (1.0 - rep.pr_x_analytic) /
                double(cfg.n_samples));

  if (!dump_path.empty()) {
    const double t_dump = times.back();
    const auto dumped = t_dump == 0.0 ? base : ens::evolve(base, t_dump);
    std::ostringstream csv;
    csv << "# phasetail ensemble sample\n";
    append_config_comment(csv, cfg);
    csv << "# t = " << format_double(t_dump) << "\n";
    csv << "x,p\n";
    for (std::size_t i = 0; i < dumped.size(); ++i)
      csv << format_double(dumped.x[i]) << ',' << format_double(dumped.p[i])
          << "\n";
    write_output(dump_path, csv.str());
  }

  std::string payload;
  if (cfg.format == OutputFormat::json) {
    json j;
    j["command"] = "ensemble";
    j["config"] = config_json(cfg);
    j["H0"] = H0;
    j["x_ret"] = tp.x_ret;
    j["p0"] = tp.p0;
    j["pr_x_analytic"] = rep.pr_x_analytic;
    j["pr_p_analytic"] = rep.pr_p_analytic;
    j["mean_energy"] = mom.mean_energy;
    j["stderr_band"] = cfg.tol.mc_stderr_band;
    j["max_abs_dev"] = rep.max_abs_dev;
    j["pass"] = rep.pass;
    j["times"] = json::array();
    for (const auto& e : rep.entries) {
      j["times"].push_back({{"t", e.t},
                            {"frac_beyond_x", e.frac_x},
                            {"frac_beyond_p", e.frac_p},
                            {"dev_x", e.dev_x},
                            {"dev_p", e.dev_p}});
    }
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "# phasetail ensemble report\n";
    append_config_comment(csv, cfg);
    csv << "# H0 = " << format_double(H0) << "\n";
    csv << "# x_ret = " << format_double(tp.x_ret) << "\n";
    csv << "# p0 = " << format_double(tp.p0) << "\n";
    csv << "# pr_x_analytic = " << format_double(rep.pr_x_analytic) << "\n";
    csv << "# pr_p_analytic = " << format_double(rep.pr_p_analytic) << "\n";
    csv << "# mean_energy = " << format_double(mom.mean_energy) << "\n";
    csv << "# stderr = " << format_double(stderr_scale) << "\n";
    csv << "# max_abs_dev = " << format_double(rep.max_abs_dev) << "\n";
    csv << "# pass = " << (rep.pass ? "true" : "false") << "\n";
    csv << "t,frac_beyond_x,frac_beyond_p,dev_x,dev_p\n";
    for (const auto& e : rep.entries)
      csv << format_double(e.t) << ',' << format_double(e.frac_x) << ','
          << format_double(e.frac_p) << ',' << format_double(e.dev_x) << ','
          << format_double(e.dev_p) << "\n";
    payload = csv.str();
  }
  write_output(out_path, payload);
  return rep.pass ? kExitOk : kExitNumerical;
}

// ------------------------------------------------------------- barrier ----

int cmd_barrier(const RunConfig& cfg, double V0, double b, double c,
                double emin, double emax, int esteps, std::vector<double> widths,
                std::optional<double> efix_opt, const std::string& out_path) {
  if (!(c > b)) throw cli::ConfigError(0, "barrier: need c > b");
  if (V0 < 0.0) throw cli::ConfigError(0, "barrier: V0 must be >= 0");
  if (esteps < 1) throw cli::ConfigError(0, "barrier: esteps must be >= 1");
  if (!(emin > 0.0) || !(emax >= emin))
    throw cli::ConfigError(0, "barrier: need 0 < emin <= emax");
  if (widths.empty())
    for (int k = 1; k <= 8; ++k) widths.push_back((c - b) / std::pow(2.0, k));
  for (double w : widths)
    if (!(w > 0.0)) throw cli::ConfigError(0, "barrier: widths must be > 0");
  const double efix = efix_opt.value_or(V0 > 0.0 ? 0.5 * V0 : 0.5);

  const auto energies = ps::uniform_grid(emin, emax, esteps);
  const auto sq = br::square_profile(V0, b, c);

  struct EnergyRow {
    double E, T_square, R_square, T_square_tm1;
    std::vector<double> T_smooth;
  };
  std::vector<EnergyRow> table1;
  for (double E : energies) {
    EnergyRow row;
    row.E = E;
    const auto closed = br::square_transmission(V0, b, c, E, cfg.m, cfg.hbar);
    row.T_square = closed.T;
    row.R_square = closed.R;
    row.T_square_tm1 = br::transfer_matrix(sq, E, cfg.m, cfg.hbar, 1).T;
    for (double w : widths) {
      if (V0 == 0.0) {
        row.T_smooth.push_back(1.0);
        continue;
      }
      const auto conv = br::converged_transmission(
          br::smooth_profile(V0, b, c, w), E, cfg.m, cfg.hbar, cfg.tol);
      row.T_smooth.push_back(conv.T);
    }
    table1.push_back(std::move(row));
  }

  struct WidthRow {
    double w, T_smooth, abs_dev;
    std::size_t slices;
  };
  std::vector<WidthRow> table2;
  const double T_square_fix =
      br::square_transmission(V0, b, c, efix, cfg.m, cfg.hbar).T;
  for (double w : widths) {
    if (V0 == 0.0) {
      table2.push_back({w, 1.0, 0.0, 1});
      continue;
    }
    const auto conv = br::converged_transmission(br::smooth_profile(V0, b, c, w),
                                                 efix, cfg.m, cfg.hbar, cfg.tol);
    table2.push_back({w, conv.T, std::fabs(conv.T - T_square_fix), conv.slices});
  }

  std::string payload;
  if (cfg.format == OutputFormat::json) {
    json j;
    j["command"] = "barrier";
    j["config"] = config_json(cfg);
    j["V0"] = V0;
    j["b"] = b;
    j["c"] = c;
    j["efix"] = efix;
    j["T_square_at_efix"] = T_square_fix;
    j["widths"] = widths;
    j["transmission_vs_energy"] = json::array();
    for (const auto& row : table1) {
      json e = {{"E", row.E},
                {"T_square", row.T_square},
                {"R_square", row.R_square},
                {"T_square_tm1", row.T_square_tm1}};
      e["T_smooth"] = row.T_smooth;
      j["transmission_vs_energy"].push_back(e);
    }
    j["square_limit_vs_width"] = json::array();
    for (const auto& row : table2)
      j["square_limit_vs_width"].push_back({{"w", row.w},
                                            {"T_smooth", row.T_smooth},
                                            {"abs_dev_vs_square", row.abs_dev},
                                            {"slices", row.slices}});
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "# phasetail barrier sweep\n";
    append_config_comment(csv, cfg);
    csv << "# V0 = " << format_double(V0) << "\n";
    csv << "# b = " << format_double(b) << "\n";
    csv << "# c = " << format_double(c) << "\n";
    csv << "# efix = " << format_double(efix) << "\n";
    csv << "# T_square_at_efix = " << format_double(T_square_fix) << "\n";
    csv << "# table: transmission_vs_energy\n";
    csv << "E,T_square,R_square,T_square_tm1";
    for (double w : widths) csv << ",T_smooth_w" << format_double(w);
    csv << "\n";
    for (const auto& row : table1) {
      csv << format_double(row.E) << ',' << format_double(row.T_square) << ','
          << format_double(row.R_square) << ','
          << format_double(row.T_square_tm1);
      for (double t : row.T_smooth) csv << ',' << format_double(t);
      csv << "\n";
    }
    csv << "# table: square_limit_vs_width\n";
    csv << "w,T_smooth,abs_dev_vs_square,slices\n";
    for (const auto& row : table2)
      csv << format_double(row.w) << ',' << format_double(row.T_smooth) << ','
          << format_double(row.abs_dev) << ',' << row.slices << "\n";
    payload = csv.str();
  }
  write_output(out_path, payload);
  return kExitOk;
}

// -------------------------------------------------------------- wigner ----

int cmd_wigner(const RunConfig& cfg, int n, int nx, int np, double xspan,
               double pspan, const std::string& out_path) {
  const auto osc = cfg.make_oscillator();
  const oscillator::QuantumState state(n, osc);
  const auto F = ps::ground_state_distribution(osc);
  const double xmax = xspan > 0.0 ? xspan : 4.0 * F.sigma_x;
  const double pmax = pspan > 0.0 ? pspan : 4.0 * F.sigma_p;
  if (!std::isfinite(xmax) || !std::isfinite(pmax))
    throw cli::ConfigError(0, "wigner: grid bounds must be finite");

  const auto xg = nx == 1 ? std::vector<double>{0.0}
                          : ps::uniform_grid(-xmax, xmax, nx);
  const auto pg = np == 1 ? std::vector<double>{0.0}
                          : ps::uniform_grid(-pmax, pmax, np);
  const auto field = ps::wigner_transform(state, xg, pg);

  double min_value = field.w[0];
  for (double v : field.w) min_value = std::min(min_value, v);
  double max_dev = 0.0;
  if (n == 0) {
    for (std::size_t ix = 0; ix < xg.size(); ++ix)
      for (std::size_t ip = 0; ip < pg.size(); ++ip)
        max_dev = std::max(max_dev,
                           std::fabs(field.at(ix, ip) - F.value(xg[ix], pg[ip])));
  }

  std::string payload;
  if (cfg.format == OutputFormat::json) {
    json j;
    j["command"] = "wigner";
    j["config"] = config_json(cfg);
    j["n"] = n;
    j["x"] = field.x;
    j["p"] = field.p;
    j["w"] = field.w;
    j["min_value"] = min_value;
    if (n == 0) j["max_deviation_from_ground_gaussian"] = max_dev;
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "# phasetail wigner field\n";
    append_config_comment(csv, cfg);
    csv << "# n = " << n << "\n";
    csv << "x,p,W\n";
    for (std::size_t ix = 0; ix < xg.size(); ++ix)
      for (std::size_t ip = 0; ip < pg.size(); ++ip)
        csv << format_double(xg[ix]) << ',' << format_double(pg[ip]) << ','
            << format_double(field.at(ix, ip)) << "\n";
    csv << "# min_value = " << format_double(min_value) << "\n";
    if (n == 0)
      csv << "# max_deviation_from_ground_gaussian = " << format_double(max_dev)
          << "\n";
    payload = csv.str();
  }
  write_output(out_path, payload);

  if (n == 0 && max_dev > cfg.tol.wigner_grid_dev) return kExitNumerical;
  return kExitOk;
}

// --------------------------------------------------------------- check ----

int cmd_check() {
  const auto results = checks::run_all();
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("[%s] %d/%zu %-62s %7.3f s (budget %g s)\n",
                r.pass ? "PASS" : "FAIL", r.id, results.size(), r.name.c_str(),
                r.seconds, r.budget_seconds);
    std::printf("       %s\n", r.detail.c_str());
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonic-oscillator tail probabilities, classical phase-space "
               "ensembles, and 1-D barrier scattering"};
  app.require_subcommand(1);

  // precedence: config file < environment < flags
  std::string config_path;
  double opt_m = 1.0, opt_C = 1.0, opt_hbar = 1.0;
  std::string opt_h0 = "paper";
  std::uint64_t opt_seed = 0;
  std::uint64_t opt_samples = 1000000;
  std::string opt_format = "csv";
  std::string out_path;

  app.add_option("--config", config_path, "run configuration file")
      ->envname("PHASETAIL_CONFIG");
  app.add_option("--m", opt_m, "particle mass (explicit units)");
  app.add_option("--C", opt_C, "stiffness coefficient (explicit units)");
  app.add_option("--hbar", opt_hbar, "action quantum (explicit units)");
  app.add_option("--h0", opt_h0, "energy convention: paper | ground | VALUE")
      ->envname("PHASETAIL_H0");
  app.add_option("--seed", opt_seed, "sampling seed")->envname("PHASETAIL_SEED");
  app.add_option("--samples", opt_samples, "Monte Carlo sample count")
      ->envname("PHASETAIL_SAMPLES");
  app.add_option("--format", opt_format, "output format: csv | json")
      ->envname("PHASETAIL_FORMAT")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "output path (default: stdout)")
      ->envname("PHASETAIL_OUT");

  auto* sub_tail = app.add_subcommand(
      "tail", "analytic quantum vs classical tail probabilities");

  auto* sub_ens = app.add_subcommand(
      "ensemble", "seeded Monte Carlo ensemble against the analytic tails");
  std::vector<double> opt_times;
  std::string dump_path;
  sub_ens->add_option("--times", opt_times,
                      "flow times to evaluate (default: 0)");
  sub_ens->add_option("--dump-samples", dump_path,
                      "also write the (x, p) sample as CSV");

  auto* sub_bar = app.add_subcommand(
      "barrier", "square vs smooth-barrier transmission sweeps");
  double opt_V0 = 1.0, opt_b = 0.0, opt_c = 1.0;
  double opt_emin = 0.05, opt_emax = 3.0;
  int opt_esteps = 60;
  std::vector<double> opt_widths;
  std::optional<double> opt_efix;
  sub_bar->add_option("--V0", opt_V0, "barrier height");
  sub_bar->add_option("--b", opt_b, "left edge");
  sub_bar->add_option("--c", opt_c, "right edge");
  sub_bar->add_option("--emin", opt_emin, "lowest energy in the sweep");
  sub_bar->add_option("--emax", opt_emax, "highest energy in the sweep");
  sub_bar->add_option("--esteps", opt_esteps, "energy grid size");
  sub_bar->add_option("--widths", opt_widths,
                      "smoothing widths (default: dyadic (c-b)/2..(c-b)/256)");
  sub_bar->add_option("--efix", opt_efix,
                      "energy for the width-convergence table (default V0/2)");

  auto* sub_wig = app.add_subcommand("wigner", "phase-space field of state n");
  int opt_n = 0, opt_nx = 101, opt_np = 101;
  double opt_xspan = 0.0, opt_pspan = 0.0;
  sub_wig->add_option("--n", opt_n, "quantum number (<= 10)")
      ->check(CLI::Range(0, 10));
  sub_wig->add_option("--nx", opt_nx, "x grid points")->check(CLI::Range(1, 4001));
  sub_wig->add_option("--np", opt_np, "p grid points")->check(CLI::Range(1, 4001));
  sub_wig->add_option("--xspan", opt_xspan, "half-width in x (default 4 sigma_x)");
  sub_wig->add_option("--pspan", opt_pspan, "half-width in p (default 4 sigma_p)");

  auto* sub_check =
      app.add_subcommand("check", "run the full acceptance suite");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    RunConfig cfg;
    if (app.count("--config") > 0) cfg = RunConfig::load(config_path);
    if (app.count("--m") > 0) cfg.m = opt_m;
    if (app.count("--C") > 0) cfg.C = opt_C;
    if (app.count("--hbar") > 0) cfg.hbar = opt_hbar;
    if (app.count("--seed") > 0) cfg.seed = opt_seed;
    if (app.count("--samples") > 0) {
      if (opt_samples == 0) throw cli::ConfigError(0, "samples must be >= 1");
      cfg.n_samples = opt_samples;
    }
    if (app.count("--format") > 0)
      cfg.format = opt_format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (app.count("--h0") > 0) {
      if (opt_h0 == "paper") {
        cfg.h0 = H0Convention::paper;
      } else if (opt_h0 == "ground") {
        cfg.h0 = H0Convention::ground;
      } else {
        cfg.h0 = H0Convention::explicit_value;
        try {
          std::size_t pos = 0;
          cfg.h0_value = std::stod(opt_h0, &pos);
          if (pos != opt_h0.size()) throw std::invalid_argument(opt_h0);
        } catch (const std::exception&) {
          throw cli::ConfigError(0, "--h0 expects paper, ground, or a number");
        }
        if (!(cfg.h0_value > 0.0))
          throw cli::ConfigError(0, "explicit --h0 must be positive");
      }
    }
    cfg.make_oscillator();  // validates m, C, hbar

    if (sub_tail->parsed()) return cmd_tail(cfg, out_path);
    if (sub_ens->parsed())
      return cmd_ensemble(cfg, opt_times, dump_path, out_path);
    if (sub_bar->parsed())
      return cmd_barrier(cfg, opt_V0, opt_b, opt_c, opt_emin, opt_emax,
                         opt_esteps, opt_widths, opt_efix, out_path);
    if (sub_wig->parsed())
      return cmd_wigner(cfg, opt_n, opt_nx, opt_np, opt_xspan, opt_pspan,
                        out_path);
    if (sub_check->parsed()) return cmd_check();
    std::cerr << "error: no subcommand selected\n";
    return kExitValidation;
  } catch (const br::NonConvergence& e) {
    std::cerr << "numerical non-convergence: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const cli::ConfigError& e) {
    if (e.line > 0)
      std::cerr << "config error at line " << e.line << ": " << e.what() << "\n";
    else
      std::cerr << "config error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
