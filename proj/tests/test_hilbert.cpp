// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>

#include "entrecip/errors.hpp"
#include "entrecip/hilbert.hpp"
#include "test_support.hpp"

using namespace entrecip;

namespace {

// Direct Fock sum sum_n conj(a)^n b^n / n!, times the two normalizations.
Complex fock_sum_overlap(Complex a, Complex b, int nmax) {
  Complex sum = 0.0;
  for (int n = 0; n < nmax; ++n) {
    sum += std::pow(std::conj(a), n) * std::pow(b, n) / std::tgamma(n + 1.0);
  }
  return sum * std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an entrecip::Error");
  return ErrorKind::InvalidParams;
}

}  // namespace

TEST_CASE("cutoff rule") {
  CHECK(FockCutoff::for_amplitude(0.0).nmax() == 10);
  CHECK(FockCutoff::for_amplitude(2.0).nmax() == static_cast<int>(std::ceil(4.0 + 10.0 * std::sqrt(5.0))));
  CHECK(FockCutoff::for_amplitude(4.0).nmax() == 58);
  CHECK(kind_of([] { FockCutoff(1); }) == ErrorKind::InvalidParams);
}

TEST_CASE("coherent state components") {
  const Vec vac = coherent_state(0.0, FockCutoff(4));
  CHECK(std::abs(vac(0) - 1.0) < 1e-15);
  CHECK(vac.tail(3).norm() < 1e-15);

  const Vec c = coherent_state(0.5, FockCutoff(16));
  CHECK(std::abs(c(1) - 0.5 * std::exp(-0.125)) < 1e-14);
  CHECK(std::abs(c(1).real() - 0.441248) < 1e-6);

  CHECK(std::abs(coherent_state(Complex(0.3, -0.8), FockCutoff(32)).norm() - 1.0) < 1e-12);
  CHECK(std::abs(coherent_state(1.0, FockCutoff(32)).norm() - 1.0) < 1e-12);
}

TEST_CASE("coherent state refuses a cutoff that truncates it") {
  CHECK(kind_of([] { coherent_state(3.0, FockCutoff(5)); }) == ErrorKind::CutoffTooSmall);
  CHECK(truncated_norm_sq(3.0, FockCutoff(5)) < 1.0 - 1e-10);
  for (double a : {0.5, 1.0, 2.0, 4.0}) {
    CHECK_NOTHROW(coherent_state(a, FockCutoff::for_amplitude(a)));
  }
}

TEST_CASE("overlap closed form") {
  CHECK(std::abs(overlap_analytic(1.0, -1.0) - std::exp(-2.0)) < 1e-15);
  CHECK(std::abs(overlap_analytic(1.0, -1.0) - 0.135335) < 1e-6);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mag(0.0, 3.0);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex a = std::polar(mag(rng), ang(rng));
    const Complex b = std::polar(mag(rng), ang(rng));
    CHECK(std::abs(overlap_analytic(a, a) - 1.0) < 1e-14);
    CHECK(std::abs(overlap_analytic(a, b) - std::conj(overlap_analytic(b, a))) < 1e-15);
    CHECK(std::abs(overlap_analytic(a, b) - fock_sum_overlap(a, b, 64)) < 1e-10);
    const FockCutoff cut(64);
    CHECK(std::abs(overlap_analytic(a, b) - coherent_state(a, cut).dot(coherent_state(b, cut))) < 1e-10);
  }
}

TEST_CASE("tensor layout") {
  const FockCutoff cut(5);
  const Vec vac = fock(0, cut);
  CHECK(tensor({qubit(0), qubit(0), vac, vac})(0) == Complex(1.0));

  const CompositeState eg = compose(qubit(1), qubit(0), vac, vac);
  CHECK(eg.amplitudes()(2 * 5 * 5) == Complex(1.0));
  CHECK(eg.amplitudes().norm() == doctest::Approx(1.0));

  const CompositeState one = compose(qubit(0), qubit(1), fock(1, cut), fock(3, cut));
  CHECK(one.amplitudes()(CompositeState::index(0, 1, 1, 3, 5)) == Complex(1.0));

  const Mat id = tensor({identity(2), identity(2), identity(5), identity(5)});
  CHECK((id - identity(100)).norm() == 0.0);

  CHECK(kind_of([&] { compose(qubit(0), qubit(0), fock(0, FockCutoff(4)), vac); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("site matrix round trip") {
  std::mt19937_64 rng(3);
  const FockCutoff cut(4);
  const CompositeState s(testing::random_state(rng, 64), cut, AtomBasis::bare);
  const CompositeState back = CompositeState::from_site_matrix(s.as_site_matrix(), cut, AtomBasis::bare);
  CHECK((back.amplitudes() - s.amplitudes()).norm() == 0.0);
}

TEST_CASE("fidelity") {
  std::mt19937_64 rng(11);
  const Vec a = testing::random_state(rng, 12);
  CHECK(fidelity(a, std::polar(1.0, 0.7) * a) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity(a, 3.0 * a) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity(qubit(0), qubit(1)) == 0.0);
}

TEST_CASE("hermiticity guard") {
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK(kind_of([&] { Operator::hermitian(m); }) == ErrorKind::NonHermitian);

  const FockCutoff cut(2);
  const CompositeState s = compose(qubit(0), qubit(0), fock(0, cut), fock(0, cut));
  const Operator bad(Mat::Identity(16, 16) + Mat::Identity(16, 16) * Complex(0.0, 1e-3));
  CHECK(kind_of([&] { evolve(s, bad, 0.0); }) == ErrorKind::NonHermitian);
  CHECK(kind_of([&] { evolve(s, bad, 1.0); }) == ErrorKind::NonHermitian);
}

TEST_CASE("propagator matches an independent matrix exponential") {
  std::mt19937_64 rng(5);
  const Mat h = testing::random_hermitian(rng, 12);
  const Propagator prop(Operator::hermitian(h));
  for (double t : {0.0, 0.3, 2.0, 7.5}) {
    const Mat expected = (Complex(0.0, -t) * h).exp();
    CHECK((prop.at(t) - expected).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("evolution properties") {
  std::mt19937_64 rng(17);
  const FockCutoff cut(5);
  const Operator s1 = Operator::hermitian(testing::random_hermitian(rng, 10));
  const Operator s2 = Operator::hermitian(testing::random_hermitian(rng, 10));
  const SitePairHamiltonian h{s1, s2, cut};
  const Operator dense = h.to_dense();
  const CompositeState psi(testing::random_state(rng, 100), cut, AtomBasis::bare);

  CHECK((evolve(psi, h, 0.0).amplitudes() - psi.amplitudes()).norm() == 0.0);

  std::uniform_real_distribution<double> times(0.0, 10.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double t = times(rng);
    const CompositeState factored = evolve(psi, h, t);
    CHECK(std::abs(factored.norm() - 1.0) < 1e-12);
    CHECK(fidelity(factored.amplitudes(), evolve(psi, dense, t).amplitudes()) > 1.0 - 1e-12);
    CHECK((factored.amplitudes() - evolve(psi, dense, t).amplitudes()).norm() < 1e-10);
  }

  for (auto [t1, t2] : {std::pair{0.4, 1.1}, std::pair{2.0, 3.5}}) {
    const CompositeState twice = evolve(evolve(psi, h, t1), h, t2);
    CHECK((twice.amplitudes() - evolve(psi, h, t1 + t2).amplitudes()).norm() < 1e-10);
  }
}

TEST_CASE("site-pair unitary") {
  std::mt19937_64 rng(23);
  const FockCutoff cut(3);
  const SitePairPropagator prop(
      {Operator::hermitian(testing::random_hermitian(rng, 6)), Operator::hermitian(testing::random_hermitian(rng, 6)), cut});
  const SitePairUnitary u = prop.at(1.3);
  const Mat dense = u.to_dense();
  CHECK((dense * u.adjoint().to_dense() - identity(36)).norm() < 1e-12);

  const CompositeState psi(testing::random_state(rng, 36), cut, AtomBasis::bare);
  CHECK((apply(u, psi).amplitudes() - dense * psi.amplitudes()).norm() < 1e-12);
}
