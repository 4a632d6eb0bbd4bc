// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#include "entrecip/sweep.hpp"

#include <fmt/format.h>

#include <cmath>
#include <ostream>

#include "entrecip/errors.hpp"
#include "parallel_rows.hpp"

namespace entrecip {

void TimeGrid::validate() const {
  if (steps < 2) throw Error(ErrorKind::InvalidParams, "a sweep needs steps >= 2");
  if (!std::isfinite(tmin) || !std::isfinite(tmax) || tmin < 0.0 || tmax <= tmin) {
    throw Error(ErrorKind::InvalidParams, "sweep range needs 0 <= tmin < tmax");
  }
}

double TimeGrid::at(int i) const {
  if (i == steps - 1) return tmax;
  return tmin + (tmax - tmin) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

std::vector<Fig1Row> sweep_fig1(const SystemParams& params, const TimeGrid& grid, Branch branch,
                                Execution execution) {
  params.validate();
  grid.validate();
  std::vector<Fig1Row> rows(grid.steps);
  detail::for_each_row(grid.steps, execution, [&](long i) {
    const double t = grid.at(static_cast<int>(i));
    Fig1Row row{t, std::nullopt, std::nullopt, norm_const(params, t, branch), ""};
    if (row.norm_const < kDegenerateNorm) {
      row.flag = "degenerate";
    } else {
      const EcsState state = deposit_state_analytic(params, t, branch).state;
      row.concurrence_analytic = ecs_concurrence(state, branch).value;
      row.concurrence_oracle = schmidt_oracle(state).value;
    }
    rows[i] = std::move(row);
  });
  return rows;
}

std::vector<RetrievalRow> sweep_retrieval(const SystemParams& params, const TimeGrid& grid, Branch branch,
                                          std::span<const ProjectionKind> projections, Engine engine,
                                          std::optional<FockCutoff> cutoff, Execution execution) {
  params.validate();
  grid.validate();
  const std::size_t per_t = projections.size();
  std::vector<RetrievalRow> rows(grid.steps * per_t);
  detail::for_each_row(grid.steps, execution, [&](long i) {
    const double t = grid.at(static_cast<int>(i));
    for (std::size_t k = 0; k < per_t; ++k) rows[i * per_t + k] = {t, projections[k], std::nullopt, std::nullopt, ""};
    if (norm_const(params, t, branch) < kDegenerateNorm) {
      for (std::size_t k = 0; k < per_t; ++k) rows[i * per_t + k].flag = "degenerate";
      return;
    }
    const auto results = run_retrieval(params, t, branch, engine, cutoff);
    for (std::size_t k = 0; k < per_t; ++k) {
      const RetrievalResult& r = results[static_cast<std::size_t>(projections[k])];
      rows[i * per_t + k].concurrence = r.concurrence.value;
      rows[i * per_t + k].projection_prob = r.projection_prob;
    }
  });
  return rows;
}

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

namespace {

std::string optional_real(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

}  // namespace

void write_fig1_csv(std::ostream& os, std::span<const Fig1Row> rows) {
  os << "t,concurrence_analytic,concurrence_oracle,norm_const,flag\n";
  for (const Fig1Row& r : rows) {
    os << format_real(r.t) << ',' << optional_real(r.concurrence_analytic) << ','
       << optional_real(r.concurrence_oracle) << ',' << format_real(r.norm_const) << ',' << r.flag << '\n';
  }
}

void write_retrieval_csv(std::ostream& os, std::span<const RetrievalRow> rows) {
  os << "t,projection,concurrence,projection_prob,flag\n";
  for (const RetrievalRow& r : rows) {
    os << format_real(r.t) << ',' << to_string(r.projection) << ',' << optional_real(r.concurrence) << ','
       << optional_real(r.projection_prob) << ',' << r.flag << '\n';
  }
}

void write_rwa_csv(std::ostream& os, std::span<const RwaRow> rows) {
  os << "omega_over_lambda,t,fidelity\n";
  for (const RwaRow& r : rows) os << format_real(r.ratio) << ',' << format_real(r.t) << ',' << format_real(r.fidelity) << '\n';
}

void write_deposit_csv(std::ostream& os, std::span<const DepositResult> rows) {
  os << "outcome,branch,probability,concurrence,engine_fidelity,flag\n";
  for (const DepositResult& r : rows) {
    os << to_string(r.outcome) << ',' << to_string(r.branch) << ',' << format_real(r.outcome_prob) << ','
       << (r.concurrence ? format_real(r.concurrence->value) : std::string()) << ','
       << (r.degenerate ? std::string() : format_real(r.engine_fidelity)) << ',' << (r.degenerate ? "degenerate" : "")
       << '\n';
  }
}

void write_retrieve_csv(std::ostream& os, std::span<const RetrievalResult> rows) {
  os << "projection,probability,concurrence,engine_fidelity,residual_prob,"
        "a_gg_re,a_gg_im,a_ge_re,a_ge_im,a_eg_re,a_eg_im,a_ee_re,a_ee_im\n";
  for (const RetrievalResult& r : rows) {
    os << to_string(r.projection) << ',' << format_real(r.projection_prob) << ',' << format_real(r.concurrence.value)
       << ',' << format_real(r.engine_fidelity) << ',' << format_real(r.residual_prob);
    for (const Complex& a : r.atomic_state.amplitudes) os << ',' << format_real(a.real()) << ',' << format_real(a.imag());
    os << '\n';
  }
}

}  // namespace entrecip
