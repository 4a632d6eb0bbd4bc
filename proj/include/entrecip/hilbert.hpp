// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

// Dense linear algebra on the truncated space
//   atom1 (x) atom2 (x) mode1 (x) mode2
// with each mode cut off at nmax Fock levels.
//
// Composite index: ((a1 * 2 + a2) * nmax + n1) * nmax + n2, where a = 0 is
// |g> in the bare basis and |+> in the dressed basis.
//
// All Hamiltonians in this project are sums of two commuting pieces, each
// acting on one atom and its own cavity ("site" j = atom_j (x) mode_j, site
// index a * nmax + n). SitePairHamiltonian / SitePairUnitary keep that
// structure so time evolution costs two (2 nmax)^2 exponentials instead of
// one (4 nmax^2)^2 one. Operator + evolve(..., const Operator&, ...) is the
// dense reference path used to check it.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <initializer_list>

namespace entrecip {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline constexpr double kTruncationTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kNormDriftTolerance = 1e-9;

class FockCutoff {
 public:
  explicit FockCutoff(int nmax);

  /// Smallest cutoff satisfying nmax >= ceil(|a|^2 + 10 sqrt(|a|^2 + 1)) for
  /// every amplitude up to max_abs_alpha.
  static FockCutoff for_amplitude(double max_abs_alpha);

  int nmax() const noexcept { return nmax_; }
  friend bool operator==(FockCutoff, FockCutoff) = default;

 private:
  int nmax_;
};

/// Squared norm of the truncated Fock expansion of |alpha>.
double truncated_norm_sq(Complex alpha, FockCutoff cutoff);

/// Fock components e^{-|a|^2/2} a^n / sqrt(n!), n < nmax. Not renormalized.
/// Throws CutoffTooSmall when the truncated norm^2 drops below 1 - 1e-10.
Vec coherent_state(Complex alpha, FockCutoff cutoff);

/// <alpha|beta> for untruncated coherent states.
Complex overlap_analytic(Complex alpha, Complex beta);

enum class AtomBasis { bare, dressed };

/// |g> / |+> for level 0, |e> / |-> for level 1.
Vec qubit(int level);
Vec fock(int n, FockCutoff cutoff);
Mat identity(Eigen::Index dim);
Mat annihilation(FockCutoff cutoff);

Vec tensor(std::initializer_list<Vec> factors);
Mat tensor(std::initializer_list<Mat> factors);

/// Phase-insensitive agreement |<a|b>|^2 / (|a|^2 |b|^2).
double fidelity(const Vec& a, const Vec& b);

class CompositeState {
 public:
  CompositeState(Vec amplitudes, FockCutoff cutoff, AtomBasis basis);

  static Eigen::Index index(int a1, int a2, int n1, int n2, int nmax) {
    return ((Eigen::Index(a1) * 2 + a2) * nmax + n1) * nmax + n2;
  }

  const Vec& amplitudes() const noexcept { return amplitudes_; }
  FockCutoff cutoff() const noexcept { return cutoff_; }
  int nmax() const noexcept { return cutoff_.nmax(); }
  AtomBasis basis() const noexcept { return basis_; }
  double norm() const { return amplitudes_.norm(); }
  bool is_normalized() const;

  /// Two-mode field vector <a1 a2|psi>, n1 * nmax + n2 ordering.
  Vec field_component(int a1, int a2) const;

  /// Atomic amplitudes <a1 a2|<field|psi> in the state's own atomic basis,
  /// ordered (00, 01, 10, 11).
  std::array<Complex, 4> project_fields(const Vec& field) const;

  /// Reshape into the (2 nmax) x (2 nmax) site1-by-site2 matrix.
  Mat as_site_matrix() const;
  static CompositeState from_site_matrix(const Mat& m, FockCutoff cutoff, AtomBasis basis);

 private:
  Vec amplitudes_;
  FockCutoff cutoff_;
  AtomBasis basis_;
};

/// atom1 (x) atom2 (x) mode1 (x) mode2 with dimension checks.
CompositeState compose(const Vec& atom1, const Vec& atom2, const Vec& mode1, const Vec& mode2,
                       AtomBasis basis = AtomBasis::bare);
/// atom1 (x) atom2 (x) field where field is a two-mode vector of length nmax^2.
CompositeState compose(const Vec& atom1, const Vec& atom2, const Vec& field, FockCutoff cutoff,
                       AtomBasis basis = AtomBasis::bare);

double hermiticity_error(const Mat& m);

class Operator {
 public:
  explicit Operator(Mat matrix);

  /// Throws NonHermitian when max |M - M^dagger| exceeds 1e-12.
  static Operator hermitian(Mat matrix);

  const Mat& matrix() const noexcept { return matrix_; }
  bool is_hermitian() const noexcept { return hermitian_; }
  Eigen::Index dim() const noexcept { return matrix_.rows(); }

 private:
  Mat matrix_;
  bool hermitian_;
};

/// Product operator site1 (x) site2 written on the composite layout.
Mat site_product_to_composite(const Mat& site1, const Mat& site2, int nmax);

/// H = H_1 (x) 1 + 1 (x) H_2 over the two sites.
struct SitePairHamiltonian {
  Operator site1;
  Operator site2;
  FockCutoff cutoff;

  Operator to_dense() const;
};

/// U = U_1 (x) U_2 over the two sites.
struct SitePairUnitary {
  Mat site1;
  Mat site2;
  FockCutoff cutoff;

  SitePairUnitary adjoint() const;
  Mat to_dense() const;
};

/// exp(-i H t) for a hermitian operator, reusing one eigendecomposition
/// across times.
class Propagator {
 public:
  explicit Propagator(const Operator& h);

  Mat at(double t) const;

 private:
  Mat vectors_;
  Eigen::VectorXd energies_;
};

class SitePairPropagator {
 public:
  explicit SitePairPropagator(const SitePairHamiltonian& h);

  SitePairUnitary at(double t) const;

 private:
  Propagator site1_;
  Propagator site2_;
  FockCutoff cutoff_;
};

CompositeState apply(const SitePairUnitary& u, const CompositeState& state);

/// exp(-i H t) |psi>, dense reference path.
CompositeState evolve(const CompositeState& state, const Operator& h, double t);
/// exp(-i H t) |psi> using the site factorization.
CompositeState evolve(const CompositeState& state, const SitePairHamiltonian& h, double t);

}  // namespace entrecip
