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

#ifndef PHASETAIL_RUNCONFIG_HPP
#define PHASETAIL_RUNCONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "phasetail/oscillator.hpp"

namespace phasetail::cli {

enum class H0Convention { paper, ground, explicit_value };
enum class OutputFormat { csv, json };

struct ConfigError : std::runtime_error {
  int line;  // 1-based line in the config file; 0 when not line-specific
  ConfigError(int line_, const std::string& msg)
      : std::runtime_error(msg), line(line_) {}
};

/// Run parameters shared by every subcommand.  Round-trips losslessly
/// through the plain-text `key = value` config format (doubles are written
/// with 17 significant digits).
struct RunConfig {
  // units: natural by default (m = C = hbar = 1), explicit when overridden
  double m = 1.0;
  double C = 1.0;
  double hbar = 1.0;

  H0Convention h0 = H0Convention::paper;
  double h0_value = 0.0;  // used when h0 == explicit_value

  std::uint64_t seed = 0;
  std::uint64_t n_samples = 1000000;
  OutputFormat format = OutputFormat::csv;

  Tolerances tol{};

  oscillator::OscillatorConfig make_oscillator() const { return {m, C, hbar}; }

  double resolve_h0(H0Convention which) const;
  double resolve_h0() const { return resolve_h0(h0); }
  std::string h0_text() const;

  std::string to_text() const;
  static RunConfig parse_text(std::istream& in);
  static RunConfig load(const std::string& path);
  void save(const std::string& path) const;
};

/// 17-significant-digit rendering used for every double in config files and
/// CSV output (bit round-trip guaranteed).
std::string format_double(double v);

}  // namespace phasetail::cli

#endif
