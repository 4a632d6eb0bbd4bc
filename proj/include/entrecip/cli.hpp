// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entrecip/analytic.hpp"
#include "entrecip/protocol.hpp"
#include "entrecip/sweep.hpp"

namespace entrecip::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitConfigError = 2;

enum class Command { deposit, retrieve, rwa, sweep_fig1, sweep_fig2, sweep_fig3, selftest };

struct RunConfig {
  Command command = Command::selftest;
  SystemParams params;       ///< defaults: lambda = 1, omega = 20
  std::optional<double> t;   ///< single time (deposit, retrieve, rwa)
  TimeGrid grid;             ///< sweeps: [0, 5] with 2000 points
  bool grid_given = false;   ///< any of --tmin/--tmax/--steps on the command line
  std::optional<Branch> branch;
  std::optional<ProjectionKind> projection;
  std::optional<int> nmax;
  std::string out_path = "-";
  std::uint64_t seed = 20260101;
  Engine engine = Engine::analytic;
  std::vector<double> ratios = {10.0, 20.0, 50.0, 100.0};
  Execution execution = Execution::parallel;
};

struct ParseResult {
  std::optional<RunConfig> config;  ///< set when the command should run
  int exit_code = kExitOk;          ///< meaningful when config is empty
  std::string message;              ///< help text or error
};

/// Flags > config file (--config, TOML/INI) > defaults.
ParseResult parse_args(const std::vector<std::string>& args);

/// Executes a parsed command, writing CSV / report to config.out_path
/// ("-" = out) and diagnostics to err. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, char** argv);

}  // namespace entrecip::cli
