// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#include "entrecip/model.hpp"

#include <cmath>
#include <limits>

#include "entrecip/errors.hpp"

namespace entrecip {

double SystemParams::strong_driving_ratio() const {
  double ratio = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 2; ++j) {
    if (lambda(j) > 0.0) ratio = std::min(ratio, omega(j) / lambda(j));
  }
  return ratio;
}

std::optional<std::string> SystemParams::warning() const {
  const double ratio = strong_driving_ratio();
  if (ratio < 10.0) {
    return "weak driving: min(omega/lambda) = " + std::to_string(ratio) +
           " < 10, the effective Hamiltonian is not expected to hold";
  }
  return std::nullopt;
}

void SystemParams::validate() const {
  for (double v : {lambda1, lambda2, omega1, omega2}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorKind::InvalidParams, "couplings and Rabi frequencies must be finite and >= 0");
    }
  }
}

namespace {

// Atomic basis: index 0 = |g>, 1 = |e>.
Mat sigma_lower() {  // |g><e|
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

Mat sigma_x() {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Mat drive_site(double omega, FockCutoff cutoff) {
  return omega * tensor({sigma_x(), identity(cutoff.nmax())});
}

Mat coupling_site(double lambda, FockCutoff cutoff) {
  const Mat a = annihilation(cutoff);
  const Mat s = sigma_lower();
  return lambda * (tensor({s, Mat(a.adjoint())}) + tensor({Mat(s.adjoint()), a}));
}

Mat effective_site(double lambda, FockCutoff cutoff) {
  // |+><+| - |-><-| is sigma^x in the bare basis.
  const Mat a = annihilation(cutoff);
  return 0.5 * lambda * tensor({sigma_x(), Mat(a + a.adjoint())});
}

template <typename SiteFn>
SitePairHamiltonian build(const SystemParams& params, FockCutoff cutoff, SiteFn site) {
  params.validate();
  return {Operator::hermitian(site(0)), Operator::hermitian(site(1)), cutoff};
}

Mat hadamard() {
  Mat h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

CompositeState rotate_atoms(const CompositeState& state, AtomBasis target) {
  const int n = state.nmax();
  const Mat site = tensor({hadamard(), identity(n)});
  const SitePairUnitary u{site, site, state.cutoff()};
  const CompositeState rotated = apply(u, state);
  return CompositeState(rotated.amplitudes(), state.cutoff(), target);
}

}  // namespace

SitePairHamiltonian build_full_hamiltonian(const SystemParams& params, FockCutoff cutoff) {
  return build(params, cutoff, [&](int j) {
    return Mat(drive_site(params.omega(j), cutoff) + coupling_site(params.lambda(j), cutoff));
  });
}

SitePairHamiltonian build_h0(const SystemParams& params, FockCutoff cutoff) {
  return build(params, cutoff, [&](int j) { return drive_site(params.omega(j), cutoff); });
}

SitePairHamiltonian build_hi(const SystemParams& params, FockCutoff cutoff) {
  return build(params, cutoff, [&](int j) { return coupling_site(params.lambda(j), cutoff); });
}

SitePairHamiltonian build_effective_hamiltonian(const SystemParams& params, FockCutoff cutoff) {
  return build(params, cutoff, [&](int j) { return effective_site(params.lambda(j), cutoff); });
}

SitePairUnitary interaction_frame_rotation(const SystemParams& params, double t, FockCutoff cutoff) {
  params.validate();
  auto site = [&](int j) {
    const double phase = params.omega(j) * t;
    const Mat atom = std::cos(phase) * identity(2) - Complex(0.0, std::sin(phase)) * sigma_x();
    return tensor({atom, identity(cutoff.nmax())});
  };
  return {site(0), site(1), cutoff};
}

CompositeState dressed_from_bare(const CompositeState& state) {
  if (state.basis() != AtomBasis::bare) {
    throw Error(ErrorKind::BasisFlagMismatch, "dressed_from_bare expects a bare-basis state");
  }
  return rotate_atoms(state, AtomBasis::dressed);
}

CompositeState bare_from_dressed(const CompositeState& state) {
  if (state.basis() != AtomBasis::dressed) {
    throw Error(ErrorKind::BasisFlagMismatch, "bare_from_dressed expects a dressed-basis state");
  }
  return rotate_atoms(state, AtomBasis::bare);
}

CompositeState to_lab_frame(const CompositeState& interaction_frame, const SystemParams& params, double t) {
  if (interaction_frame.basis() != AtomBasis::bare) {
    throw Error(ErrorKind::BasisFlagMismatch, "frame rotation acts on bare-basis states");
  }
  return apply(interaction_frame_rotation(params, t, interaction_frame.cutoff()).adjoint(), interaction_frame);
}

}  // namespace entrecip
