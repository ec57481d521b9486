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

#include "phasetail/runconfig.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace phasetail::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double RunConfig::resolve_h0(H0Convention which) const {
  const auto osc = make_oscillator();
  switch (which) {
    case H0Convention::paper:
      return oscillator::paper_h0(osc);
    case H0Convention::ground:
      return oscillator::energy(0, osc);
    case H0Convention::explicit_value:
      if (!(h0_value > 0.0))
        throw ConfigError(0, "explicit h0 must be positive");
      return h0_value;
  }
  throw ConfigError(0, "unreachable h0 convention");
}

std::string RunConfig::h0_text() const {
  switch (h0) {
    case H0Convention::paper: return "paper";
    case H0Convention::ground: return "ground";
    case H0Convention::explicit_value: return format_double(h0_value);
  }
  return "paper";
}

std::string RunConfig::to_text() const {
  std::ostringstream out;
  out << "# phasetail run configuration\n";
  out << "m = " << format_double(m) << "\n";
  out << "C = " << format_double(C) << "\n";
  out << "hbar = " << format_double(hbar) << "\n";
  out << "h0 = " << h0_text() << "\n";
  out << "seed = " << seed << "\n";
  out << "samples = " << n_samples << "\n";
  out << "format = " << (format == OutputFormat::csv ? "csv" : "json") << "\n";
  out << "tol_equivalence_rel = " << format_double(tol.equivalence_rel) << "\n";
  out << "tol_tail_quadrature = " << format_double(tol.tail_quadrature) << "\n";
  out << "tol_flux = " << format_double(tol.flux_conservation) << "\n";
  out << "tol_transfer = " << format_double(tol.transfer_tol) << "\n";
  out << "tol_wigner_grid = " << format_double(tol.wigner_grid_dev) << "\n";
  out << "tol_mc_band = " << format_double(tol.mc_stderr_band) << "\n";
  return out.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& v, int line) {
  std::size_t pos = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError(line, "expected a number, got '" + v + "'");
  }
  if (pos != v.size())
    throw ConfigError(line, "trailing characters after number '" + v + "'");
  return d;
}

std::uint64_t parse_u64(const std::string& v, int line) {
  if (v.find('-') != std::string::npos)
    throw ConfigError(line, "expected a non-negative integer, got '" + v + "'");
  std::size_t pos = 0;
  unsigned long long u = 0;
  try {
    u = std::stoull(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError(line, "expected a non-negative integer, got '" + v + "'");
  }
  if (pos != v.size())
    throw ConfigError(line, "trailing characters after integer '" + v + "'");
  return u;
}

}  // namespace

RunConfig RunConfig::parse_text(std::istream& in) {
  RunConfig cfg;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(lineno, "expected 'key = value', got '" + trim(raw) + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw ConfigError(lineno, "empty value for '" + key + "'");

    if (key == "m") {
      cfg.m = parse_double(value, lineno);
    } else if (key == "C") {
      cfg.C = parse_double(value, lineno);
    } else if (key == "hbar") {
      cfg.hbar = parse_double(value, lineno);
    } else if (key == "h0") {
      if (value == "paper") {
        cfg.h0 = H0Convention::paper;
      } else if (value == "ground") {
        cfg.h0 = H0Convention::ground;
      } else {
        cfg.h0 = H0Convention::explicit_value;
        cfg.h0_value = parse_double(value, lineno);
      }
    } else if (key == "seed") {
      cfg.seed = parse_u64(value, lineno);
    } else if (key == "samples") {
      cfg.n_samples = parse_u64(value, lineno);
      if (cfg.n_samples == 0) throw ConfigError(lineno, "samples must be >= 1");
    } else if (key == "format") {
      if (value == "csv") {
        cfg.format = OutputFormat::csv;
      } else if (value == "json") {
        cfg.format = OutputFormat::json;
      } else {
        throw ConfigError(lineno, "format must be csv or json, got '" + value + "'");
      }
    } else if (key == "tol_equivalence_rel") {
      cfg.tol.equivalence_rel = parse_double(value, lineno);
    } else if (key == "tol_tail_quadrature") {
      cfg.tol.tail_quadrature = parse_double(value, lineno);
    } else if (key == "tol_flux") {
      cfg.tol.flux_conservation = parse_double(value, lineno);
    } else if (key == "tol_transfer") {
      cfg.tol.transfer_tol = parse_double(value, lineno);
    } else if (key == "tol_wigner_grid") {
      cfg.tol.wigner_grid_dev = parse_double(value, lineno);
    } else if (key == "tol_mc_band") {
      cfg.tol.mc_stderr_band = parse_double(value, lineno);
    } else {
      throw ConfigError(lineno, "unknown key '" + key + "'");
    }
  }
  if (!(cfg.m > 0.0) || !(cfg.C > 0.0) || !(cfg.hbar > 0.0))
    throw ConfigError(0, "m, C and hbar must all be positive");
  return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
  return parse_text(in);
}

void RunConfig::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError(0, "cannot write config file '" + path + "'");
  out << to_text();
}

}  // namespace phasetail::cli
