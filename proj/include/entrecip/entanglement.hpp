// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "entrecip/analytic.hpp"
#include "entrecip/hilbert.hpp"

namespace entrecip {

enum class ConcurrenceMethod {
  ecs_analytic,    ///< closed form for the two-branch coherent superposition
  wootters,        ///< mixed two-qubit states
  pure_det,        ///< 2 |det| of the 2x2 amplitude matrix
  schmidt_oracle,  ///< exact orthonormalization of the coherent labels
  fock_schmidt,    ///< SVD of a truncated two-mode Fock amplitude matrix
};

std::string_view to_string(ConcurrenceMethod m);

struct ConcurrenceValue {
  double value;
  ConcurrenceMethod method;
};

inline constexpr double kConcurrenceClamp = 1e-12;

/// Clamps roundoff excursions of at most 1e-12 outside [0, 1]; larger ones
/// throw ValueOutOfRange.
ConcurrenceValue make_concurrence(double raw, ConcurrenceMethod method);

/// Closed form for (e^{iut}|a1,a2> +- e^{-iut}|-a1,-a2>)/sqrt(M+-):
///   sqrt[(1 - e^{-4|a1|^2})(1 - e^{-4|a2|^2})] / [1 +- cos(2ut) e^{-2|a1|^2 - 2|a2|^2}]
/// The state must have exactly that shape; throws DegenerateBranch when the
/// branch weight vanishes.
ConcurrenceValue ecs_concurrence(const EcsState& state, Branch branch);
ConcurrenceValue ecs_concurrence(const SystemParams& params, double t, Branch branch);

/// Independent route: per mode, Gram-Schmidt the (at most two) distinct
/// coherent labels, write the state as a 2x2 amplitude matrix m in that
/// orthonormal basis and return 2 |det m| / <psi|psi>.
ConcurrenceValue schmidt_oracle(const EcsState& state);

/// 2 |A_gg A_ee - A_ge A_eg| / sum |A|^2 for a bare-basis pure state. The
/// radical form 2 N^2 sqrt(|A_ee A_gg|^2 + |A_eg A_ge|^2 - A) is evaluated as a
/// consistency check on the squared value.
ConcurrenceValue pure2q_concurrence(const QubitPairState& state);

/// Radicand |A_ee A_gg|^2 + |A_eg A_ge|^2 - 2 Re(A_ee A_gg A_ge^* A_eg^*),
/// scaled by N^4.
double pure2q_radicand(const QubitPairState& state);

/// max(0, chi_1 - chi_2 - chi_3 - chi_4) with chi the square roots of the
/// eigenvalues of rho (sy x sy) rho^* (sy x sy), in decreasing order.
/// Throws InvalidDensityMatrix unless rho is 4x4, hermitian, unit trace and
/// positive semidefinite (all within 1e-10).
ConcurrenceValue wootters_concurrence(const Mat& rho);

/// sqrt(2 (1 - tr rho_1^2)) of a pure two-mode state given as Fock
/// amplitudes (n1 * nmax + n2). Equals the concurrence for Schmidt rank <= 2.
ConcurrenceValue fock_concurrence(const Vec& field, FockCutoff cutoff);

}  // namespace entrecip
