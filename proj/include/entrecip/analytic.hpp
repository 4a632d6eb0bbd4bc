// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

// Closed-form states of the deposit / retrieval protocol.
//
// Field states are finite superpositions of two-mode coherent products
// sum_k c_k |alpha1_k, alpha2_k>, evaluated exactly through coherent-state
// overlaps. Atomic states are four amplitudes in the bare {gg, ge, eg, ee}
// or dressed {++, +-, -+, --} basis, first letter = atom 1.

#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "entrecip/hilbert.hpp"
#include "entrecip/model.hpp"

namespace entrecip {

inline constexpr double kDegenerateNorm = 1e-12;

enum class Branch { plus, minus };

constexpr double sign(Branch b) noexcept { return b == Branch::plus ? 1.0 : -1.0; }
std::string_view to_string(Branch b);
std::optional<Branch> parse_branch(std::string_view s);

/// Atomic detection outcome after the deposit stage.
enum class AtomicOutcome { gg, ge, eg, ee };

inline constexpr std::array<AtomicOutcome, 4> kAllOutcomes = {AtomicOutcome::gg, AtomicOutcome::ge,
                                                              AtomicOutcome::eg, AtomicOutcome::ee};
std::string_view to_string(AtomicOutcome o);
/// ge, eg leave the fields in the plus superposition; gg, ee in the minus one.
Branch branch_of(AtomicOutcome o);
/// Bare-basis level (0 = g) of each atom.
std::array<int, 2> levels(AtomicOutcome o);

/// The seven coherent products the retrieved fields can be found in:
/// |0,0>, |-+ i l1 t', -+ i l2 t'>, |-+ i l1 t', 0>, |0, -+ i l2 t'>.
enum class ProjectionKind { vac_vac, mm, pp, m0, p0, zero_m, zero_p };

inline constexpr std::array<ProjectionKind, 7> kAllProjections = {
    ProjectionKind::vac_vac, ProjectionKind::mm,     ProjectionKind::pp,    ProjectionKind::m0,
    ProjectionKind::p0,      ProjectionKind::zero_m, ProjectionKind::zero_p};

/// "vac_vac", "mm", "pp", "m0", "p0", "0m", "0p".
std::string_view to_string(ProjectionKind k);
std::optional<ProjectionKind> parse_projection(std::string_view s);
/// Coherent labels (beta1, beta2) of the projector at retrieval time tprime.
std::array<Complex, 2> projection_amplitudes(const SystemParams& params, double tprime, ProjectionKind k);

struct EcsTerm {
  Complex coeff;
  Complex alpha1;
  Complex alpha2;
};

class EcsState {
 public:
  /// One to four terms. With normalized = true the norm is checked to 1e-12.
  explicit EcsState(std::vector<EcsTerm> terms, bool normalized = false,
                    std::optional<double> norm_const = std::nullopt);

  const std::vector<EcsTerm>& terms() const noexcept { return terms_; }
  bool is_normalized() const noexcept { return normalized_; }
  /// M+- for the two-branch deposit states.
  std::optional<double> norm_const() const noexcept { return norm_const_; }

  /// <this|other>
  Complex inner(const EcsState& other) const;
  double norm_sq() const;
  /// Largest |alpha| over all terms and both modes.
  double max_amplitude() const;
  /// Two-mode Fock vector, index n1 * nmax + n2.
  Vec to_fock(FockCutoff cutoff) const;

 private:
  std::vector<EcsTerm> terms_;
  bool normalized_;
  std::optional<double> norm_const_;
};

struct QubitPairState {
  std::array<Complex, 4> amplitudes{};
  AtomBasis basis = AtomBasis::bare;
  bool normalized = false;

  Vec as_vector() const;
  double norm_sq() const;
};

/// Amplitude of the deposit field superposition, alpha_j = -i lambda_j t / 2.
Complex deposit_amplitude(const SystemParams& params, int site, double t);

/// 1 +- cos(2 phase) e^{-exponent}, written as 2cos^2 / 2sin^2 plus an expm1
/// correction so small phases and exponents do not cancel.
double branch_weight(double phase, double exponent, Branch branch);

/// M+- = 2 [1 +- cos(2ut) exp(-2|alpha1|^2 - 2|alpha2|^2)], evaluated without
/// cancellation near t = 0.
double norm_const(const SystemParams& params, double t, Branch branch);

struct DepositAnalytic {
  EcsState state;       ///< normalized field state after detecting the atoms
  double outcome_prob;  ///< probability of each atomic outcome of this branch, M+- / 8
};

/// (e^{iut} |a1, a2> +- e^{-iut} |-a1, -a2>) / sqrt(M+-).
/// Throws DegenerateBranch when M+- < 1e-12 (minus branch at t = 0).
DepositAnalytic deposit_state_analytic(const SystemParams& params, double t, Branch branch);

struct RetrievalSector {
  std::array<int, 2> dressed;  ///< 0 = |+>, 1 = |->, per atom
  EcsState field;              ///< unnormalized two-term field superposition
};

/// Joint atoms + fields state after the retrieval evolution:
///   prefactor * sum_k |dressed_k> (x) field_k
/// where field_k carries the e^{+-iut'} phases and prefactor = 1 / (2 sqrt(M+-))
/// collects the input-state normalization and the |gg> -> dressed expansion.
struct RetrievalState {
  Branch branch;
  double prefactor;
  std::array<RetrievalSector, 4> sectors;
};

/// Requires tprime == t (the retrieval reuses the deposit duration); throws
/// TPrimeMismatch otherwise.
RetrievalState retrieval_state_analytic(const SystemParams& params, double t, double tprime, Branch branch);

/// Dressed atomic amplitudes (p1..p4) = <projector | field_k>, without the
/// common prefactor. Unnormalized.
QubitPairState p_coeffs(const SystemParams& params, double tprime, Branch branch, ProjectionKind projection);

/// Probability of finding the fields in the projector's coherent product,
/// prefactor^2 * sum_k |p_k|^2.
double projection_probability(const SystemParams& params, double tprime, Branch branch, ProjectionKind projection);

/// The +-1 combinations below without normalization; sum |A|^2 = 4 sum |p|^2.
std::array<Complex, 4> bare_combination(const std::array<Complex, 4>& dressed);

/// A_gg = p1+p2+p3+p4, A_ge = p1-p2+p3-p4, A_eg = p1+p2-p3-p4,
/// A_ee = p1-p2-p3+p4, then normalized. Throws ZeroState if sum |A|^2 < 1e-24.
QubitPairState bare_amplitudes(const QubitPairState& dressed);

}  // namespace entrecip
