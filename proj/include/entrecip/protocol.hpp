// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

// The two protocol stages end to end.
//
// Deposit: atoms start in (|eg> + |ge>)/sqrt(2), cavities in vacuum; after
// time t both atoms are detected in the bare basis, leaving the cavities in a
// two-branch coherent superposition.
//
// Retrieval: fresh atoms in |gg> meet that superposition for t' = t, then the
// cavities are post-selected on one of seven coherent products.
//
// Three engines compute each stage: the closed forms, truncated-Fock
// evolution under the effective Hamiltonian, and truncated-Fock evolution
// under the full driven Jaynes-Cummings Hamiltonian.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "entrecip/analytic.hpp"
#include "entrecip/entanglement.hpp"
#include "entrecip/hilbert.hpp"
#include "entrecip/model.hpp"

namespace entrecip {

enum class Engine { analytic, numeric_effective, numeric_full };

/// "analytic", "effective", "full".
std::string_view to_string(Engine e);
std::optional<Engine> parse_engine(std::string_view s);

/// How independent grid points are evaluated. Results never depend on it.
enum class Execution { serial, parallel };

/// Cutoffs from the truncation rule, sized for the largest amplitude each
/// stage reaches: lambda t / 2 for the deposit, lambda t for the retrieval.
FockCutoff deposit_cutoff(const SystemParams& params, double t);
FockCutoff retrieval_cutoff(const SystemParams& params, double t);

/// (|eg> + |ge>)/sqrt(2) (x) |0,0>, bare basis.
CompositeState deposit_initial_state(FockCutoff cutoff);

/// Joint state after the deposit evolution, in the lab-frame convention of
/// the closed forms (see to_lab_frame). Numeric engines only.
CompositeState deposit_evolved(const SystemParams& params, double t, Engine engine, FockCutoff cutoff);

struct DepositResult {
  AtomicOutcome outcome;
  Branch branch;
  std::optional<EcsState> field_state;  ///< closed form; absent when degenerate
  Vec field_state_numeric;              ///< normalized Fock field state; empty when degenerate
  std::optional<ConcurrenceValue> concurrence;
  double outcome_prob;
  /// fidelity(field_state, field_state_numeric); 1 for the analytic engine,
  /// NaN when degenerate.
  double engine_fidelity;
  bool degenerate;
};

std::array<DepositResult, 4> run_deposit(const SystemParams& params, double t, Engine engine,
                                         std::optional<FockCutoff> cutoff = std::nullopt);

struct RetrievalResult {
  ProjectionKind projection;
  QubitPairState atomic_state;  ///< bare, normalized
  ConcurrenceValue concurrence;
  double projection_prob;
  double residual_prob;    ///< 1 - sum over the seven projections
  double engine_fidelity;  ///< atomic-state fidelity against the closed form
};

std::array<RetrievalResult, 7> run_retrieval(const SystemParams& params, double t, Branch branch, Engine engine,
                                             std::optional<FockCutoff> cutoff = std::nullopt);

/// Lab-frame fidelity between exp(-i H t)|psi0> and U0(t) exp(-i H_eff t)|psi0>
/// for the deposit initial state. Needs lambda1 == lambda2, omega1 == omega2.
double rwa_fidelity(const SystemParams& params, double t, FockCutoff cutoff);

struct RwaRow {
  double ratio;  ///< omega / lambda
  double t;
  double fidelity;
};

std::vector<RwaRow> rwa_validation(std::span<const SystemParams> params_list, std::span<const double> t_grid,
                                   std::optional<FockCutoff> cutoff = std::nullopt,
                                   Execution execution = Execution::parallel);

}  // namespace entrecip
