// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#include "entrecip/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "entrecip/errors.hpp"

namespace entrecip {

std::string_view to_string(ConcurrenceMethod m) {
  switch (m) {
    case ConcurrenceMethod::ecs_analytic: return "ecs_analytic";
    case ConcurrenceMethod::wootters: return "wootters";
    case ConcurrenceMethod::pure_det: return "pure_det";
    case ConcurrenceMethod::schmidt_oracle: return "schmidt_oracle";
    case ConcurrenceMethod::fock_schmidt: return "fock_schmidt";
  }
  return "?";
}

ConcurrenceValue make_concurrence(double raw, ConcurrenceMethod method) {
  if (!(raw >= -kConcurrenceClamp && raw <= 1.0 + kConcurrenceClamp)) {
    throw Error(ErrorKind::ValueOutOfRange,
                std::string(to_string(method)) + " concurrence " + std::to_string(raw) + " outside [0, 1]");
  }
  return {std::clamp(raw, 0.0, 1.0), method};
}

ConcurrenceValue ecs_concurrence(const EcsState& state, Branch branch) {
  const auto& terms = state.terms();
  if (terms.size() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "closed-form concurrence needs a two-term superposition");
  }
  const EcsTerm& first = terms[0];
  const EcsTerm& second = terms[1];
  const double scale = std::abs(first.coeff);
  const bool mirrored = std::abs(second.alpha1 + first.alpha1) <= 1e-12 &&
                        std::abs(second.alpha2 + first.alpha2) <= 1e-12;
  const bool conjugate = std::abs(second.coeff - sign(branch) * std::conj(first.coeff)) <= 1e-9 * scale;
  if (!mirrored || !conjugate || scale == 0.0) {
    throw Error(ErrorKind::ValueOutOfRange, "state is not of the form e^{iut}|a> +- e^{-iut}|-a>");
  }

  const double n1 = std::norm(first.alpha1);
  const double n2 = std::norm(first.alpha2);
  const double weight = branch_weight(std::arg(first.coeff), 2.0 * n1 + 2.0 * n2, branch);
  if (2.0 * weight < kDegenerateNorm) {
    throw Error(ErrorKind::DegenerateBranch, "branch weight vanishes");
  }
  const double numerator = std::sqrt(std::expm1(-4.0 * n1) * std::expm1(-4.0 * n2));
  return make_concurrence(numerator / weight, ConcurrenceMethod::ecs_analytic);
}

ConcurrenceValue ecs_concurrence(const SystemParams& params, double t, Branch branch) {
  return ecs_concurrence(deposit_state_analytic(params, t, branch).state, branch);
}

ConcurrenceValue schmidt_oracle(const EcsState& state) {
  constexpr double kSameLabel = 1e-12;

  // Distinct labels per mode.
  std::array<std::vector<Complex>, 2> labels;
  auto label_index = [&](int mode, Complex alpha) {
    auto& list = labels[mode];
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (std::abs(list[i] - alpha) <= kSameLabel) return static_cast<int>(i);
    }
    list.push_back(alpha);
    if (list.size() > 2) {
      throw Error(ErrorKind::DimensionMismatch, "oracle handles at most two coherent labels per mode");
    }
    return static_cast<int>(list.size() - 1);
  };
  std::vector<std::array<int, 2>> which;
  for (const EcsTerm& t : state.terms()) which.push_back({label_index(0, t.alpha1), label_index(1, t.alpha2)});

  // Coordinates of each label in the orthonormal basis {|L0>, (|L1> - s|L0>)/r}.
  std::array<std::array<Eigen::Vector2cd, 2>, 2> coords;
  for (int mode = 0; mode < 2; ++mode) {
    coords[mode][0] = Eigen::Vector2cd(1.0, 0.0);
    if (labels[mode].size() == 2) {
      const Complex l0 = labels[mode][0];
      const Complex l1 = labels[mode][1];
      const Complex s = overlap_analytic(l0, l1);
      const double r = std::sqrt(-std::expm1(-std::norm(l1 - l0)));
      coords[mode][1] = Eigen::Vector2cd(s, r);
    }
  }

  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  for (std::size_t k = 0; k < which.size(); ++k) {
    const Eigen::Vector2cd& v1 = coords[0][which[k][0]];
    const Eigen::Vector2cd& v2 = coords[1][which[k][1]];
    m += state.terms()[k].coeff * v1 * v2.transpose();
  }
  const double norm_sq = m.squaredNorm();
  if (norm_sq == 0.0) throw Error(ErrorKind::ZeroState, "superposition vanishes");
  if (labels[0].size() < 2 || labels[1].size() < 2) return {0.0, ConcurrenceMethod::schmidt_oracle};
  return make_concurrence(2.0 * std::abs(m.determinant()) / norm_sq, ConcurrenceMethod::schmidt_oracle);
}

namespace {

void require_bare(const QubitPairState& state) {
  if (state.basis != AtomBasis::bare) {
    throw Error(ErrorKind::BasisFlagMismatch, "two-qubit concurrence expects bare-basis amplitudes");
  }
}

}  // namespace

double pure2q_radicand(const QubitPairState& state) {
  require_bare(state);
  const auto& a = state.amplitudes;  // gg, ge, eg, ee
  const double n2 = state.norm_sq();
  if (n2 < 1e-24) throw Error(ErrorKind::ZeroState, "atomic amplitudes vanish");
  const Complex ee_gg = a[3] * a[0];
  const Complex eg_ge = a[2] * a[1];
  const double cross = 2.0 * (ee_gg * std::conj(a[1]) * std::conj(a[2])).real();
  return (std::norm(ee_gg) + std::norm(eg_ge) - cross) / (n2 * n2);
}

ConcurrenceValue pure2q_concurrence(const QubitPairState& state) {
  require_bare(state);
  const auto& a = state.amplitudes;
  const double n2 = state.norm_sq();
  if (n2 < 1e-24) throw Error(ErrorKind::ZeroState, "atomic amplitudes vanish");
  const double det = std::abs(a[0] * a[3] - a[1] * a[2]) / n2;
  const double radicand = pure2q_radicand(state);
  if (std::abs(radicand - det * det) > 1e-12) {
    throw std::logic_error("determinant and radical forms of the concurrence disagree");
  }
  return make_concurrence(2.0 * det, ConcurrenceMethod::pure_det);
}

ConcurrenceValue wootters_concurrence(const Mat& rho) {
  constexpr double kTol = 1e-10;
  if (rho.rows() != 4 || rho.cols() != 4) throw Error(ErrorKind::InvalidDensityMatrix, "rho must be 4x4");
  if (hermiticity_error(rho) > kTol) throw Error(ErrorKind::InvalidDensityMatrix, "rho is not hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > kTol) throw Error(ErrorKind::InvalidDensityMatrix, "trace(rho) != 1");

  Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (rho + rho.adjoint()));
  const Eigen::VectorXd& w = eig.eigenvalues();
  if (w.minCoeff() < -kTol) throw Error(ErrorKind::InvalidDensityMatrix, "rho is not positive semidefinite");

  // rho = W W^dag with subnormalized eigenvectors as columns; the chi_i are
  // the singular values of W^T (sy x sy) W, which avoids square roots of
  // roundoff-level eigenvalues.
  Mat weighted = Mat::Zero(4, 4);
  for (int k = 0; k < 4; ++k) {
    if (w(k) > 1e-14) weighted.col(k) = std::sqrt(w(k)) * eig.eigenvectors().col(k);
  }
  Mat spin_flip = Mat::Zero(4, 4);
  spin_flip(0, 3) = -1.0;
  spin_flip(1, 2) = 1.0;
  spin_flip(2, 1) = 1.0;
  spin_flip(3, 0) = -1.0;
  const Mat tau = weighted.transpose() * spin_flip * weighted;
  const Eigen::VectorXd chi = Eigen::JacobiSVD<Mat>(tau).singularValues();  // decreasing
  const double c = chi(0) - chi(1) - chi(2) - chi(3);
  return make_concurrence(std::max(0.0, c), ConcurrenceMethod::wootters);
}

ConcurrenceValue fock_concurrence(const Vec& field, FockCutoff cutoff) {
  const Eigen::Index n = cutoff.nmax();
  if (field.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "field vector must have nmax^2 entries");
  // Row-major n1 * nmax + n2 -> matrix(n1, n2).
  Mat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m.row(i) = field.segment(i * n, n).transpose();
  const Eigen::VectorXd sigma = Eigen::JacobiSVD<Mat>(m).singularValues();
  const double total = sigma.squaredNorm();
  if (total == 0.0) throw Error(ErrorKind::ZeroState, "field vanishes");
  // 2 (1 - sum s_i^2) = 4 sum_{i<j} s_i s_j with s the Schmidt weights.
  double pairs = 0.0;
  double prefix = 0.0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    const double s = sigma(i) * sigma(i) / total;
    pairs += s * prefix;
    prefix += s;
  }
  return make_concurrence(2.0 * std::sqrt(pairs), ConcurrenceMethod::fock_schmidt);
}

}  // namespace entrecip
