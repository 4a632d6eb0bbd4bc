// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#include "entrecip/hilbert.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "entrecip/errors.hpp"

namespace entrecip {

FockCutoff::FockCutoff(int nmax) : nmax_(nmax) {
  if (nmax < 2) {
    throw Error(ErrorKind::InvalidParams, "Fock cutoff needs nmax >= 2, got " + std::to_string(nmax));
  }
}

FockCutoff FockCutoff::for_amplitude(double max_abs_alpha) {
  const double n2 = max_abs_alpha * max_abs_alpha;
  const int nmax = static_cast<int>(std::ceil(n2 + 10.0 * std::sqrt(n2 + 1.0)));
  return FockCutoff(std::max(nmax, 2));
}

namespace {

Vec coherent_components(Complex alpha, int nmax) {
  Vec out(nmax);
  out(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < nmax; ++n) {
    out(n) = out(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  }
  return out;
}

}  // namespace

double truncated_norm_sq(Complex alpha, FockCutoff cutoff) {
  return coherent_components(alpha, cutoff.nmax()).squaredNorm();
}

Vec coherent_state(Complex alpha, FockCutoff cutoff) {
  Vec out = coherent_components(alpha, cutoff.nmax());
  const double norm = out.norm();
  if (norm < 1.0 - kTruncationTolerance) {
    throw Error(ErrorKind::CutoffTooSmall,
                "nmax=" + std::to_string(cutoff.nmax()) + " truncates coherent amplitude |alpha|=" +
                    std::to_string(std::abs(alpha)) + " (norm " + std::to_string(norm) + ")");
  }
  return out;
}

Complex overlap_analytic(Complex alpha, Complex beta) {
  return std::exp(-0.5 * std::norm(alpha) - 0.5 * std::norm(beta) + std::conj(alpha) * beta);
}

Vec qubit(int level) {
  if (level != 0 && level != 1) {
    throw Error(ErrorKind::DimensionMismatch, "qubit level must be 0 or 1");
  }
  Vec v = Vec::Zero(2);
  v(level) = 1.0;
  return v;
}

Vec fock(int n, FockCutoff cutoff) {
  if (n < 0 || n >= cutoff.nmax()) {
    throw Error(ErrorKind::DimensionMismatch, "Fock level outside cutoff");
  }
  Vec v = Vec::Zero(cutoff.nmax());
  v(n) = 1.0;
  return v;
}

Mat identity(Eigen::Index dim) { return Mat::Identity(dim, dim); }

Mat annihilation(FockCutoff cutoff) {
  const int n = cutoff.nmax();
  Mat a = Mat::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

Vec tensor(std::initializer_list<Vec> factors) {
  Vec out = Vec::Ones(1);
  for (const Vec& f : factors) {
    Vec next(out.size() * f.size());
    for (Eigen::Index i = 0; i < out.size(); ++i) next.segment(i * f.size(), f.size()) = out(i) * f;
    out = std::move(next);
  }
  return out;
}

Mat tensor(std::initializer_list<Mat> factors) {
  Mat out = Mat::Ones(1, 1);
  for (const Mat& f : factors) {
    Mat next(out.rows() * f.rows(), out.cols() * f.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j)
        next.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = out(i, j) * f;
    out = std::move(next);
  }
  return out;
}

double fidelity(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "fidelity of unequal lengths");
  const double na = a.squaredNorm();
  const double nb = b.squaredNorm();
  if (na == 0.0 || nb == 0.0) throw Error(ErrorKind::ZeroState, "fidelity with a zero vector");
  return std::min(1.0, std::norm(a.dot(b)) / (na * nb));
}

// ---------------------------------------------------------------------------

CompositeState::CompositeState(Vec amplitudes, FockCutoff cutoff, AtomBasis basis)
    : amplitudes_(std::move(amplitudes)), cutoff_(cutoff), basis_(basis) {
  const Eigen::Index n = cutoff.nmax();
  if (amplitudes_.size() != 4 * n * n) {
    throw Error(ErrorKind::DimensionMismatch, "composite state length must be 4 nmax^2");
  }
}

bool CompositeState::is_normalized() const { return std::abs(norm() - 1.0) <= kNormDriftTolerance; }

Vec CompositeState::field_component(int a1, int a2) const {
  const Eigen::Index n2 = Eigen::Index(nmax()) * nmax();
  return amplitudes_.segment((a1 * 2 + a2) * n2, n2);
}

std::array<Complex, 4> CompositeState::project_fields(const Vec& field) const {
  const Eigen::Index n2 = Eigen::Index(nmax()) * nmax();
  if (field.size() != n2) throw Error(ErrorKind::DimensionMismatch, "field vector must have nmax^2 entries");
  std::array<Complex, 4> out{};
  for (int a = 0; a < 4; ++a) out[a] = field.dot(amplitudes_.segment(a * n2, n2));
  return out;
}

Mat CompositeState::as_site_matrix() const {
  const int n = nmax();
  Mat m(2 * n, 2 * n);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int n1 = 0; n1 < n; ++n1)
        for (int k2 = 0; k2 < n; ++k2) m(a1 * n + n1, a2 * n + k2) = amplitudes_(index(a1, a2, n1, k2, n));
  return m;
}

CompositeState CompositeState::from_site_matrix(const Mat& m, FockCutoff cutoff, AtomBasis basis) {
  const int n = cutoff.nmax();
  if (m.rows() != 2 * n || m.cols() != 2 * n) {
    throw Error(ErrorKind::DimensionMismatch, "site matrix must be (2 nmax) x (2 nmax)");
  }
  Vec v(4 * Eigen::Index(n) * n);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int n1 = 0; n1 < n; ++n1)
        for (int k2 = 0; k2 < n; ++k2) v(index(a1, a2, n1, k2, n)) = m(a1 * n + n1, a2 * n + k2);
  return CompositeState(std::move(v), cutoff, basis);
}

CompositeState compose(const Vec& atom1, const Vec& atom2, const Vec& mode1, const Vec& mode2,
                       AtomBasis basis) {
  if (atom1.size() != 2 || atom2.size() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "atomic factors must have length 2");
  }
  if (mode1.size() != mode2.size() || mode1.size() < 2) {
    throw Error(ErrorKind::DimensionMismatch, "mode factors must share a cutoff >= 2");
  }
  return CompositeState(tensor({atom1, atom2, mode1, mode2}), FockCutoff(static_cast<int>(mode1.size())),
                        basis);
}

CompositeState compose(const Vec& atom1, const Vec& atom2, const Vec& field, FockCutoff cutoff,
                       AtomBasis basis) {
  if (atom1.size() != 2 || atom2.size() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "atomic factors must have length 2");
  }
  if (field.size() != Eigen::Index(cutoff.nmax()) * cutoff.nmax()) {
    throw Error(ErrorKind::DimensionMismatch, "field vector must have nmax^2 entries");
  }
  return CompositeState(tensor({atom1, atom2, field}), cutoff, basis);
}

// ---------------------------------------------------------------------------

double hermiticity_error(const Mat& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Operator::Operator(Mat matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw Error(ErrorKind::DimensionMismatch, "operator must be square");
  hermitian_ = hermiticity_error(matrix_) <= kHermitianTolerance;
}

Operator Operator::hermitian(Mat matrix) {
  Operator op(std::move(matrix));
  if (!op.is_hermitian()) {
    throw Error(ErrorKind::NonHermitian,
                "max |M - M^dagger| = " + std::to_string(hermiticity_error(op.matrix())));
  }
  return op;
}

Mat site_product_to_composite(const Mat& site1, const Mat& site2, int nmax) {
  const Eigen::Index s = 2 * Eigen::Index(nmax);
  if (site1.rows() != s || site1.cols() != s || site2.rows() != s || site2.cols() != s) {
    throw Error(ErrorKind::DimensionMismatch, "site operators must be (2 nmax) x (2 nmax)");
  }
  // Kronecker product over (site1, site2) followed by the index permutation
  // (a1 n1 a2 n2) -> (a1 a2 n1 n2).
  const Eigen::Index dim = s * s;
  Mat out(dim, dim);
  auto composite = [nmax](Eigen::Index i1, Eigen::Index i2) {
    return CompositeState::index(int(i1 / nmax), int(i2 / nmax), int(i1 % nmax), int(i2 % nmax), nmax);
  };
  for (Eigen::Index r1 = 0; r1 < s; ++r1)
    for (Eigen::Index r2 = 0; r2 < s; ++r2) {
      const Eigen::Index row = composite(r1, r2);
      for (Eigen::Index c1 = 0; c1 < s; ++c1) {
        const Complex left = site1(r1, c1);
        for (Eigen::Index c2 = 0; c2 < s; ++c2) out(row, composite(c1, c2)) = left * site2(r2, c2);
      }
    }
  return out;
}

Operator SitePairHamiltonian::to_dense() const {
  const Mat id = identity(2 * cutoff.nmax());
  return Operator(site_product_to_composite(site1.matrix(), id, cutoff.nmax()) +
                  site_product_to_composite(id, site2.matrix(), cutoff.nmax()));
}

SitePairUnitary SitePairUnitary::adjoint() const { return {site1.adjoint(), site2.adjoint(), cutoff}; }

Mat SitePairUnitary::to_dense() const { return site_product_to_composite(site1, site2, cutoff.nmax()); }

Propagator::Propagator(const Operator& h) {
  if (!h.is_hermitian()) {
    throw Error(ErrorKind::NonHermitian,
                "propagator needs a hermitian generator (max |M - M^dagger| = " +
                    std::to_string(hermiticity_error(h.matrix())) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(h.matrix());
  vectors_ = solver.eigenvectors();
  energies_ = solver.eigenvalues();
}

Mat Propagator::at(double t) const {
  Vec phases(energies_.size());
  for (Eigen::Index k = 0; k < energies_.size(); ++k) phases(k) = std::polar(1.0, -energies_(k) * t);
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

SitePairPropagator::SitePairPropagator(const SitePairHamiltonian& h)
    : site1_(h.site1), site2_(h.site2), cutoff_(h.cutoff) {}

SitePairUnitary SitePairPropagator::at(double t) const { return {site1_.at(t), site2_.at(t), cutoff_}; }

CompositeState apply(const SitePairUnitary& u, const CompositeState& state) {
  if (u.cutoff != state.cutoff()) throw Error(ErrorKind::DimensionMismatch, "cutoff of operator and state differ");
  const Mat psi = state.as_site_matrix();
  return CompositeState::from_site_matrix(u.site1 * psi * u.site2.transpose(), state.cutoff(), state.basis());
}

namespace {

void check_norm(double before, double after) {
  if (std::abs(after - before) > kNormDriftTolerance) {
    throw Error(ErrorKind::NormDrift,
                "norm changed from " + std::to_string(before) + " to " + std::to_string(after));
  }
}

}  // namespace

CompositeState evolve(const CompositeState& state, const Operator& h, double t) {
  if (h.dim() != state.amplitudes().size()) {
    throw Error(ErrorKind::DimensionMismatch, "operator and state dimensions differ");
  }
  if (!h.is_hermitian()) throw Error(ErrorKind::NonHermitian, "evolve needs a hermitian generator");
  if (t == 0.0) return state;
  const Propagator prop(h);
  CompositeState out(prop.at(t) * state.amplitudes(), state.cutoff(), state.basis());
  check_norm(state.norm(), out.norm());
  return out;
}

CompositeState evolve(const CompositeState& state, const SitePairHamiltonian& h, double t) {
  if (!h.site1.is_hermitian() || !h.site2.is_hermitian()) {
    throw Error(ErrorKind::NonHermitian, "evolve needs a hermitian generator");
  }
  if (t == 0.0) return state;
  CompositeState out = apply(SitePairPropagator(h).at(t), state);
  check_norm(state.norm(), out.norm());
  return out;
}

}  // namespace entrecip
