// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#include "entrecip/analytic.hpp"

#include <cmath>
#include <string>

#include "entrecip/errors.hpp"

namespace entrecip {

std::string_view to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

std::optional<Branch> parse_branch(std::string_view s) {
  if (s == "plus" || s == "+") return Branch::plus;
  if (s == "minus" || s == "-") return Branch::minus;
  return std::nullopt;
}

std::string_view to_string(AtomicOutcome o) {
  switch (o) {
    case AtomicOutcome::gg: return "gg";
    case AtomicOutcome::ge: return "ge";
    case AtomicOutcome::eg: return "eg";
    case AtomicOutcome::ee: return "ee";
  }
  return "?";
}

Branch branch_of(AtomicOutcome o) {
  return (o == AtomicOutcome::ge || o == AtomicOutcome::eg) ? Branch::plus : Branch::minus;
}

std::array<int, 2> levels(AtomicOutcome o) {
  const int i = static_cast<int>(o);
  return {i / 2, i % 2};
}

std::string_view to_string(ProjectionKind k) {
  switch (k) {
    case ProjectionKind::vac_vac: return "vac_vac";
    case ProjectionKind::mm: return "mm";
    case ProjectionKind::pp: return "pp";
    case ProjectionKind::m0: return "m0";
    case ProjectionKind::p0: return "p0";
    case ProjectionKind::zero_m: return "0m";
    case ProjectionKind::zero_p: return "0p";
  }
  return "?";
}

std::optional<ProjectionKind> parse_projection(std::string_view s) {
  for (ProjectionKind k : kAllProjections) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::array<Complex, 2> projection_amplitudes(const SystemParams& params, double tprime, ProjectionKind k) {
  const Complex m1(0.0, -params.lambda1 * tprime);
  const Complex m2(0.0, -params.lambda2 * tprime);
  switch (k) {
    case ProjectionKind::vac_vac: return {0.0, 0.0};
    case ProjectionKind::mm: return {m1, m2};
    case ProjectionKind::pp: return {-m1, -m2};
    case ProjectionKind::m0: return {m1, 0.0};
    case ProjectionKind::p0: return {-m1, 0.0};
    case ProjectionKind::zero_m: return {0.0, m2};
    case ProjectionKind::zero_p: return {0.0, -m2};
  }
  return {0.0, 0.0};
}

// ---------------------------------------------------------------------------

EcsState::EcsState(std::vector<EcsTerm> terms, bool normalized, std::optional<double> norm_const)
    : terms_(std::move(terms)), normalized_(normalized), norm_const_(norm_const) {
  if (terms_.empty() || terms_.size() > 4) {
    throw Error(ErrorKind::DimensionMismatch, "coherent superpositions hold 1 to 4 terms");
  }
  if (normalized_ && std::abs(norm_sq() - 1.0) > 1e-12) {
    throw Error(ErrorKind::ValueOutOfRange, "state flagged normalized has norm^2 " + std::to_string(norm_sq()));
  }
}

Complex EcsState::inner(const EcsState& other) const {
  Complex sum = 0.0;
  for (const EcsTerm& a : terms_)
    for (const EcsTerm& b : other.terms_)
      sum += std::conj(a.coeff) * b.coeff * overlap_analytic(a.alpha1, b.alpha1) * overlap_analytic(a.alpha2, b.alpha2);
  return sum;
}

double EcsState::norm_sq() const { return inner(*this).real(); }

double EcsState::max_amplitude() const {
  double m = 0.0;
  for (const EcsTerm& t : terms_) m = std::max({m, std::abs(t.alpha1), std::abs(t.alpha2)});
  return m;
}

Vec EcsState::to_fock(FockCutoff cutoff) const {
  const Eigen::Index n = cutoff.nmax();
  Vec out = Vec::Zero(n * n);
  for (const EcsTerm& t : terms_) {
    out += t.coeff * tensor({coherent_state(t.alpha1, cutoff), coherent_state(t.alpha2, cutoff)});
  }
  return out;
}

Vec QubitPairState::as_vector() const {
  Vec v(4);
  for (int k = 0; k < 4; ++k) v(k) = amplitudes[k];
  return v;
}

double QubitPairState::norm_sq() const {
  double s = 0.0;
  for (const Complex& a : amplitudes) s += std::norm(a);
  return s;
}

// ---------------------------------------------------------------------------

Complex deposit_amplitude(const SystemParams& params, int site, double t) {
  return {0.0, -0.5 * params.lambda(site) * t};
}

double branch_weight(double phase, double exponent, Branch branch) {
  const double c2 = std::cos(2.0 * phase);
  if (branch == Branch::plus) {
    const double c = std::cos(phase);
    return 2.0 * c * c + c2 * std::expm1(-exponent);
  }
  const double s = std::sin(phase);
  return 2.0 * s * s - c2 * std::expm1(-exponent);
}

namespace {

// 2 |alpha1|^2 + 2 |alpha2|^2
double overlap_exponent(const SystemParams& params, double t) {
  const double a1 = 0.5 * params.lambda1 * t;
  const double a2 = 0.5 * params.lambda2 * t;
  return 2.0 * (a1 * a1 + a2 * a2);
}

void check_time(double t) {
  if (!std::isfinite(t) || t < 0.0) throw Error(ErrorKind::InvalidParams, "time must be finite and >= 0");
}

}  // namespace

double norm_const(const SystemParams& params, double t, Branch branch) {
  return 2.0 * branch_weight(params.u() * t, overlap_exponent(params, t), branch);
}

DepositAnalytic deposit_state_analytic(const SystemParams& params, double t, Branch branch) {
  params.validate();
  check_time(t);
  const double m = norm_const(params, t, branch);
  if (m < kDegenerateNorm) {
    throw Error(ErrorKind::DegenerateBranch,
                std::string(to_string(branch)) + " branch has M = " + std::to_string(m) + " at t = " + std::to_string(t));
  }
  const double scale = 1.0 / std::sqrt(m);
  const double phase = params.u() * t;
  const Complex a1 = deposit_amplitude(params, 0, t);
  const Complex a2 = deposit_amplitude(params, 1, t);
  std::vector<EcsTerm> terms = {
      {scale * std::polar(1.0, phase), a1, a2},
      {sign(branch) * scale * std::polar(1.0, -phase), -a1, -a2},
  };
  return {EcsState(std::move(terms), true, m), m / 8.0};
}

namespace {

// Field superpositions after evolving the deposited state for tprime under
// the effective Hamiltonian: the dressed sector (s1, s2) displaces mode j by
// -i s_j lambda_j tprime / 2. Displacements along the imaginary axis compose
// without extra phase.
std::array<RetrievalSector, 4> retrieval_sectors(const SystemParams& params, double t, double tprime, Branch branch) {
  const double phase = params.u() * t;
  const Complex a1 = deposit_amplitude(params, 0, t);
  const Complex a2 = deposit_amplitude(params, 1, t);
  auto sector = [&](int k) {
    const int d1 = k / 2;
    const int d2 = k % 2;
    const Complex shift1(0.0, -(d1 == 0 ? 1.0 : -1.0) * 0.5 * params.lambda1 * tprime);
    const Complex shift2(0.0, -(d2 == 0 ? 1.0 : -1.0) * 0.5 * params.lambda2 * tprime);
    std::vector<EcsTerm> terms = {
        {std::polar(1.0, phase), a1 + shift1, a2 + shift2},
        {sign(branch) * std::polar(1.0, -phase), -a1 + shift1, -a2 + shift2},
    };
    return RetrievalSector{{d1, d2}, EcsState(std::move(terms))};
  };
  return {sector(0), sector(1), sector(2), sector(3)};
}

}  // namespace

RetrievalState retrieval_state_analytic(const SystemParams& params, double t, double tprime, Branch branch) {
  check_time(tprime);
  if (std::abs(tprime - t) > 1e-12 * std::max(1.0, std::abs(t))) {
    throw Error(ErrorKind::TPrimeMismatch, "retrieval time must equal the deposit time");
  }
  const DepositAnalytic input = deposit_state_analytic(params, t, branch);
  const double m = *input.state.norm_const();
  return {branch, 0.5 / std::sqrt(m), retrieval_sectors(params, t, tprime, branch)};
}

QubitPairState p_coeffs(const SystemParams& params, double tprime, Branch branch, ProjectionKind projection) {
  const RetrievalState state = retrieval_state_analytic(params, tprime, tprime, branch);
  const auto beta = projection_amplitudes(params, tprime, projection);
  const EcsState projector({{1.0, beta[0], beta[1]}});
  QubitPairState out;
  out.basis = AtomBasis::dressed;
  for (int k = 0; k < 4; ++k) out.amplitudes[k] = projector.inner(state.sectors[k].field);
  return out;
}

double projection_probability(const SystemParams& params, double tprime, Branch branch, ProjectionKind projection) {
  const RetrievalState state = retrieval_state_analytic(params, tprime, tprime, branch);
  return state.prefactor * state.prefactor * p_coeffs(params, tprime, branch, projection).norm_sq();
}

std::array<Complex, 4> bare_combination(const std::array<Complex, 4>& p) {
  return {p[0] + p[1] + p[2] + p[3], p[0] - p[1] + p[2] - p[3], p[0] + p[1] - p[2] - p[3],
          p[0] - p[1] - p[2] + p[3]};
}

QubitPairState bare_amplitudes(const QubitPairState& dressed) {
  if (dressed.basis != AtomBasis::dressed) {
    throw Error(ErrorKind::BasisFlagMismatch, "bare_amplitudes expects dressed coefficients");
  }
  QubitPairState out;
  out.amplitudes = bare_combination(dressed.amplitudes);
  const double n2 = out.norm_sq();
  if (n2 < 1e-24) throw Error(ErrorKind::ZeroState, "atomic amplitudes vanish");
  const double scale = 1.0 / std::sqrt(n2);
  for (Complex& a : out.amplitudes) a *= scale;
  out.basis = AtomBasis::bare;
  out.normalized = true;
  return out;
}

}  // namespace entrecip
