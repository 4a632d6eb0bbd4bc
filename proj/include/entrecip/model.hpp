// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "entrecip/hilbert.hpp"

namespace entrecip {

/// Two driven atoms, each coupled to its own cavity. Units with hbar = 1.
struct SystemParams {
  double lambda1 = 1.0;  ///< atom-cavity coupling, site 1
  double lambda2 = 1.0;
  double omega1 = 20.0;  ///< classical Rabi frequency, site 1
  double omega2 = 20.0;

  double u() const noexcept { return omega1 + omega2; }
  double lambda(int site) const { return site == 0 ? lambda1 : lambda2; }
  double omega(int site) const { return site == 0 ? omega1 : omega2; }

  /// min_j omega_j / lambda_j; infinite when both couplings vanish.
  double strong_driving_ratio() const;
  /// Set when the strong-driving ratio falls below 10.
  std::optional<std::string> warning() const;

  /// Throws InvalidParams for negative or non-finite entries.
  void validate() const;
};

// All builders return operators in the bare atomic basis.

/// sum_j Omega_j (sigma_j + sigma_j^dag) + lambda_j (a_j^dag sigma_j + a_j sigma_j^dag)
SitePairHamiltonian build_full_hamiltonian(const SystemParams& params, FockCutoff cutoff);
/// Drive terms only.
SitePairHamiltonian build_h0(const SystemParams& params, FockCutoff cutoff);
/// Jaynes-Cummings coupling terms only.
SitePairHamiltonian build_hi(const SystemParams& params, FockCutoff cutoff);
/// sum_j (lambda_j / 2)(|+><+| - |-><-|)_j (a_j^dag + a_j)
SitePairHamiltonian build_effective_hamiltonian(const SystemParams& params, FockCutoff cutoff);

/// U0(t) = exp(-i H0 t) = prod_j [cos(Omega_j t) - i sin(Omega_j t) sigma^x_j].
SitePairUnitary interaction_frame_rotation(const SystemParams& params, double t, FockCutoff cutoff);

/// Per-atom rotation |+-> = (|g> +- |e>)/sqrt(2). Each throws
/// BasisFlagMismatch if the state is already in the target basis.
CompositeState dressed_from_bare(const CompositeState& state);
CompositeState bare_from_dressed(const CompositeState& state);

/// Lab-frame state in the sign convention of the closed-form results: the
/// dressed sector |+,+> picks up e^{+iut}, i.e. U0(t)^dag applied to the
/// interaction-frame state.
CompositeState to_lab_frame(const CompositeState& interaction_frame, const SystemParams& params, double t);

}  // namespace entrecip
