// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#include "entrecip/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "entrecip/errors.hpp"
#include "entrecip/selftest.hpp"

namespace entrecip::cli {

namespace {

const std::map<std::string, Command> kCommands = {
    {"deposit", Command::deposit},       {"retrieve", Command::retrieve},     {"rwa", Command::rwa},
    {"sweep-fig1", Command::sweep_fig1}, {"sweep-fig2", Command::sweep_fig2}, {"sweep-fig3", Command::sweep_fig3},
    {"selftest", Command::selftest},
};

const std::map<std::string, std::string> kDescriptions = {
    {"deposit", "atomic outcomes and field states after the deposit stage"},
    {"retrieve", "atomic states after retrieval and field post-selection"},
    {"rwa", "full vs effective Hamiltonian fidelity across drive strengths"},
    {"sweep-fig1", "field concurrence vs deposit time"},
    {"sweep-fig2", "atomic concurrence vs time, one projection (default vac_vac)"},
    {"sweep-fig3", "atomic concurrence vs time for the mm and m0 projections"},
    {"selftest", "invariant suite with measured tolerances"},
};

void add_common_options(CLI::App& app, RunConfig& cfg, std::string& branch, std::string& projection,
                        std::string& engine) {
  app.add_option("--lambda1", cfg.params.lambda1, "atom-cavity coupling, site 1")->capture_default_str();
  app.add_option("--lambda2", cfg.params.lambda2, "atom-cavity coupling, site 2")->capture_default_str();
  app.add_option("--omega1", cfg.params.omega1, "Rabi frequency of drive 1")->capture_default_str();
  app.add_option("--omega2", cfg.params.omega2, "Rabi frequency of drive 2")->capture_default_str();
  app.add_option("--t", cfg.t, "evolution time (deposit, retrieve, rwa)");
  app.add_option("--tmin", cfg.grid.tmin, "sweep start")->capture_default_str();
  app.add_option("--tmax", cfg.grid.tmax, "sweep end")->capture_default_str();
  app.add_option("--steps", cfg.grid.steps, "sweep points, endpoints included")->capture_default_str();
  app.add_option("--branch", branch, "field branch")->check(CLI::IsMember({"plus", "minus"}));
  app.add_option("--projection", projection, "field post-selection")
      ->check(CLI::IsMember({"vac_vac", "mm", "pp", "m0", "p0", "0m", "0p"}));
  app.add_option("--nmax", cfg.nmax, "Fock cutoff override")->check(CLI::Range(2, 400));
  app.add_option("--out", cfg.out_path, "output file, - for stdout")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--engine", engine, "analytic | effective | full")
      ->check(CLI::IsMember({"analytic", "effective", "full"}))
      ->capture_default_str();
  app.add_option("--ratios", cfg.ratios, "omega/lambda values for rwa")->delimiter(',');
  app.add_flag_function(
      "--serial", [&cfg](std::int64_t) { cfg.execution = Execution::serial; }, "evaluate sweep rows serially");
}

}  // namespace

ParseResult parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Entanglement reciprocation between driven atoms and two-mode cavity fields"};
  app.name("entrecip");
  app.set_config("--config", "", "TOML/INI file with option defaults");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string branch;
  std::string projection;
  std::string engine = "analytic";
  add_common_options(app, cfg, branch, projection, engine);
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, command] : kCommands) {
    subs[name] = app.add_subcommand(name, kDescriptions.at(name))->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    const int code = app.exit(e, os, os);
    return {std::nullopt, code == 0 ? kExitOk : kExitConfigError, os.str()};
  }

  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) cfg.command = kCommands.at(name);
  }
  cfg.grid_given = app.count("--tmin") + app.count("--tmax") + app.count("--steps") > 0;
  if (!branch.empty()) cfg.branch = parse_branch(branch);
  if (!projection.empty()) cfg.projection = parse_projection(projection);
  cfg.engine = *parse_engine(engine);

  try {
    cfg.params.validate();
    if (cfg.t && (*cfg.t < 0.0 || !std::isfinite(*cfg.t))) {
      throw Error(ErrorKind::InvalidParams, "--t must be finite and >= 0");
    }
    cfg.grid.validate();
  } catch (const Error& e) {
    return {std::nullopt, kExitConfigError, std::string("error: ") + e.what()};
  }
  return {cfg, kExitOk, ""};
}

namespace {

std::optional<FockCutoff> cutoff_of(const RunConfig& cfg) {
  if (cfg.nmax) return FockCutoff(*cfg.nmax);
  return std::nullopt;
}

int execute(const RunConfig& cfg, std::ostream& os, std::ostream& err) {
  const SystemParams& p = cfg.params;
  if (auto w = p.warning(); w && cfg.command != Command::rwa) err << "warning: " << *w << '\n';

  switch (cfg.command) {
    case Command::deposit: {
      const auto rows = run_deposit(p, cfg.t.value_or(4.0), cfg.engine, cutoff_of(cfg));
      write_deposit_csv(os, rows);
      return kExitOk;
    }
    case Command::retrieve: {
      const auto rows = run_retrieval(p, cfg.t.value_or(4.0), cfg.branch.value_or(Branch::plus), cfg.engine,
                                      cutoff_of(cfg));
      if (cfg.projection) {
        const RetrievalResult one[] = {rows[static_cast<std::size_t>(*cfg.projection)]};
        write_retrieve_csv(os, one);
      } else {
        write_retrieve_csv(os, rows);
      }
      return kExitOk;
    }
    case Command::rwa: {
      std::vector<SystemParams> list;
      for (double ratio : cfg.ratios) {
        SystemParams q;
        q.lambda1 = q.lambda2 = p.lambda1;
        q.omega1 = q.omega2 = ratio * p.lambda1;
        list.push_back(q);
      }
      std::vector<double> times;
      if (cfg.grid_given) {
        for (int i = 0; i < cfg.grid.steps; ++i) times.push_back(cfg.grid.at(i));
      } else {
        times.push_back(cfg.t.value_or(1.0));
      }
      write_rwa_csv(os, rwa_validation(list, times, cutoff_of(cfg), cfg.execution));
      return kExitOk;
    }
    case Command::sweep_fig1:
      write_fig1_csv(os, sweep_fig1(p, cfg.grid, cfg.branch.value_or(Branch::minus), cfg.execution));
      return kExitOk;
    case Command::sweep_fig2: {
      const ProjectionKind kinds[] = {cfg.projection.value_or(ProjectionKind::vac_vac)};
      write_retrieval_csv(os, sweep_retrieval(p, cfg.grid, cfg.branch.value_or(Branch::plus), kinds, cfg.engine,
                                              cutoff_of(cfg), cfg.execution));
      return kExitOk;
    }
    case Command::sweep_fig3: {
      const ProjectionKind kinds[] = {ProjectionKind::mm, ProjectionKind::m0};
      write_retrieval_csv(os, sweep_retrieval(p, cfg.grid, cfg.branch.value_or(Branch::plus), kinds, cfg.engine,
                                              cutoff_of(cfg), cfg.execution));
      return kExitOk;
    }
    case Command::selftest: {
      const auto results = run_selftest({p, cfg.seed, cfg.nmax});
      write_report(os, results);
      for (const PropertyResult& r : results) {
        if (!r.pass) return kExitPropertyFailure;
      }
      return kExitOk;
    }
  }
  return kExitConfigError;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* os = &out;
  if (cfg.out_path != "-") {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return kExitConfigError;
    }
    os = &file;
  }
  try {
    const int code = execute(cfg, *os, err);
    os->flush();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool config_problem = e.kind() == ErrorKind::InvalidParams || e.kind() == ErrorKind::CutoffTooSmall ||
                                e.kind() == ErrorKind::TPrimeMismatch || e.kind() == ErrorKind::DegenerateBranch;
    return config_problem ? kExitConfigError : kExitPropertyFailure;
  }
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const ParseResult parsed = parse_args(args);
  if (!parsed.config) {
    std::ostream& os = parsed.exit_code == kExitOk ? std::cout : std::cerr;
    os << parsed.message;
    if (!parsed.message.empty() && parsed.message.back() != '\n') os << '\n';
    return parsed.exit_code;
  }
  return run(*parsed.config, std::cout, std::cerr);
}

}  // namespace entrecip::cli
