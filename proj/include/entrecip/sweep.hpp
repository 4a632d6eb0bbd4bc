// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

// Time sweeps behind the figure-data commands. Every grid point is
// independent; Execution::parallel spreads rows over OpenMP threads and
// Execution::serial is the reference loop. Both return rows in grid order
// and produce identical values.

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entrecip/protocol.hpp"

namespace entrecip {

/// steps points from tmin to tmax inclusive.
struct TimeGrid {
  double tmin = 0.0;
  double tmax = 5.0;
  int steps = 2000;

  /// Throws InvalidParams unless steps >= 2, tmin >= 0 and tmax > tmin.
  void validate() const;
  double at(int i) const;
};

struct Fig1Row {
  double t;
  std::optional<double> concurrence_analytic;
  std::optional<double> concurrence_oracle;
  double norm_const;
  std::string flag;  ///< empty, or "degenerate"
};

/// Field concurrence after the deposit: closed form and oracle side by side.
std::vector<Fig1Row> sweep_fig1(const SystemParams& params, const TimeGrid& grid, Branch branch,
                                Execution execution = Execution::parallel);

struct RetrievalRow {
  double t;
  ProjectionKind projection;
  std::optional<double> concurrence;
  std::optional<double> projection_prob;
  std::string flag;
};

/// Atomic concurrence after retrieval and post-selection, one row per
/// (t, projection) in grid-major order.
std::vector<RetrievalRow> sweep_retrieval(const SystemParams& params, const TimeGrid& grid, Branch branch,
                                          std::span<const ProjectionKind> projections, Engine engine,
                                          std::optional<FockCutoff> cutoff = std::nullopt,
                                          Execution execution = Execution::parallel);

void write_fig1_csv(std::ostream& os, std::span<const Fig1Row> rows);
void write_retrieval_csv(std::ostream& os, std::span<const RetrievalRow> rows);
void write_rwa_csv(std::ostream& os, std::span<const RwaRow> rows);
void write_deposit_csv(std::ostream& os, std::span<const DepositResult> rows);
void write_retrieve_csv(std::ostream& os, std::span<const RetrievalResult> rows);

/// 17 significant digits, the precision every CSV column uses.
std::string format_real(double v);

}  // namespace entrecip
