// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "entrecip/errors.hpp"
#include "entrecip/model.hpp"
#include "test_support.hpp"

using namespace entrecip;

namespace {

const Vec kPlus = (qubit(0) + qubit(1)) / std::sqrt(2.0);
const Vec kMinus = (qubit(0) - qubit(1)) / std::sqrt(2.0);

Mat hadamard() {
  Mat h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

Eigen::Index idx(int a1, int a2, int n1, int n2, int nmax) { return CompositeState::index(a1, a2, n1, n2, nmax); }

}  // namespace

TEST_CASE("system parameters") {
  SystemParams p;
  CHECK(p.u() == 40.0);
  CHECK(p.strong_driving_ratio() == 20.0);
  CHECK_FALSE(p.warning());
  p.omega2 = 5.0;
  CHECK(p.warning());
  p.lambda1 = -1.0;
  CHECK_THROWS_AS(p.validate(), Error);
  p.lambda1 = std::nan("");
  CHECK_THROWS_AS(p.validate(), Error);
  CHECK_NOTHROW(SystemParams{0.0, 0.0, 0.0, 0.0}.validate());
}

TEST_CASE("undriven, uncoupled spectrum") {
  const SystemParams p{0.0, 0.0, 20.0, 7.0};
  const FockCutoff cut(3);
  const Mat h = build_full_hamiltonian(p, cut).to_dense().matrix();
  std::vector<double> got;
  const Eigen::SelfAdjointEigenSolver<Mat> eig(h);
  for (double e : eig.eigenvalues()) got.push_back(e);
  std::vector<double> want;
  for (double s1 : {-1.0, 1.0})
    for (double s2 : {-1.0, 1.0})
      for (int k = 0; k < 9; ++k) want.push_back(s1 * 20.0 + s2 * 7.0);
  std::sort(want.begin(), want.end());
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
}

TEST_CASE("full Hamiltonian matrix elements") {
  const SystemParams p{0.7, 1.3, 20.0, 13.0};
  const int n = 4;
  const FockCutoff cut(n);
  const Mat h = build_full_hamiltonian(p, cut).to_dense().matrix();
  const Mat hi = build_hi(p, cut).to_dense().matrix();
  const Mat h0 = build_h0(p, cut).to_dense().matrix();

  CHECK(hermiticity_error(h) == 0.0);
  CHECK(h(idx(0, 0, 0, 0, n), idx(1, 0, 0, 0, n)) == Complex(20.0));
  CHECK(h(idx(0, 0, 0, 0, n), idx(0, 1, 0, 0, n)) == Complex(13.0));
  CHECK(hi(idx(0, 0, 1, 0, n), idx(1, 0, 0, 0, n)) == Complex(0.7));
  CHECK(hi(idx(0, 0, 0, 1, n), idx(0, 1, 0, 0, n)) == Complex(1.3));
  CHECK(std::abs(hi(idx(0, 0, 0, 3, n), idx(0, 1, 0, 2, n)) - 1.3 * std::sqrt(3.0)) < 1e-14);
  CHECK(hi(idx(1, 0, 0, 0, n), idx(0, 0, 0, 0, n)) == Complex(0.0));
  CHECK((h0 + hi - h).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("effective Hamiltonian in the dressed basis") {
  const SystemParams p{0.7, 1.3, 20.0, 13.0};
  const int n = 5;
  const FockCutoff cut(n);
  const Mat heff = build_effective_hamiltonian(p, cut).to_dense().matrix();
  CHECK(hermiticity_error(heff) < 1e-14);

  const Mat r = tensor({hadamard(), hadamard(), identity(n), identity(n)});
  const Mat hd = r * heff * r;
  const Eigen::Index block = n * n;
  for (int s = 0; s < 4; ++s)
    for (int q = 0; q < 4; ++q)
      if (s != q) CHECK(hd.block(s * block, q * block, block, block).cwiseAbs().maxCoeff() < 1e-14);

  const Mat x = annihilation(cut) + annihilation(cut).adjoint();
  const Mat expected_pp = 0.5 * p.lambda1 * tensor({x, identity(n)}) + 0.5 * p.lambda2 * tensor({identity(n), x});
  CHECK((hd.block(0, 0, block, block) - expected_pp).cwiseAbs().maxCoeff() < 1e-14);
  const Mat expected_mm = -expected_pp;
  CHECK((hd.block(3 * block, 3 * block, block, block) - expected_mm).cwiseAbs().maxCoeff() < 1e-14);

  const Mat h0 = build_h0(p, cut).to_dense().matrix();
  CHECK((h0 * heff - heff * h0).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("effective evolution displaces the dressed |+,+> sector") {
  const SystemParams p{1.0, 0.7, 20.0, 20.0};
  const double t = 2.0;
  const FockCutoff cut = FockCutoff::for_amplitude(0.5 * t);
  const CompositeState start = compose(kPlus, kPlus, fock(0, cut), fock(0, cut));
  const CompositeState out = evolve(start, build_effective_hamiltonian(p, cut), t);
  const Complex a1(0.0, -0.5 * p.lambda1 * t);
  const Complex a2(0.0, -0.5 * p.lambda2 * t);
  const Vec expected = tensor({kPlus, kPlus, coherent_state(a1, cut), coherent_state(a2, cut)});
  CHECK(fidelity(out.amplitudes(), expected) >= 1.0 - 1e-8);

  const CompositeState start_mp = compose(kMinus, kPlus, fock(0, cut), fock(0, cut));
  const Vec expected_mp = tensor({kMinus, kPlus, coherent_state(-a1, cut), coherent_state(a2, cut)});
  CHECK(fidelity(evolve(start_mp, build_effective_hamiltonian(p, cut), t).amplitudes(), expected_mp) >= 1.0 - 1e-8);
}

TEST_CASE("basis change") {
  const FockCutoff cut(3);
  const Vec f = fock(1, cut);
  const CompositeState gg = compose(qubit(0), qubit(0), f, f);
  const CompositeState d = dressed_from_bare(gg);
  CHECK(d.basis() == AtomBasis::dressed);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2) CHECK(std::abs(d.amplitudes()(idx(a1, a2, 1, 1, 3)) - 0.5) < 1e-15);

  const CompositeState eg = compose(qubit(1), qubit(0), f, f);
  const CompositeState ge = compose(qubit(0), qubit(1), f, f);
  const CompositeState sym((eg.amplitudes() + ge.amplitudes()) / std::sqrt(2.0), cut, AtomBasis::bare);
  const CompositeState ds = dressed_from_bare(sym);
  CHECK(std::abs(ds.amplitudes()(idx(0, 0, 1, 1, 3)) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(ds.amplitudes()(idx(1, 1, 1, 1, 3)) + 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(ds.amplitudes()(idx(0, 1, 1, 1, 3))) < 1e-15);
  CHECK(std::abs(ds.amplitudes()(idx(1, 0, 1, 1, 3))) < 1e-15);

  std::mt19937_64 rng(29);
  const CompositeState any(testing::random_state(rng, 36), cut, AtomBasis::bare);
  CHECK((bare_from_dressed(dressed_from_bare(any)).amplitudes() - any.amplitudes()).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(dressed_from_bare(d), Error);
  CHECK_THROWS_AS(bare_from_dressed(any), Error);
}

TEST_CASE("drive propagator") {
  const SystemParams p{1.0, 1.0, 20.0, 13.0};
  const FockCutoff cut(3);
  CHECK((interaction_frame_rotation(p, 0.0, cut).to_dense() - identity(36)).cwiseAbs().maxCoeff() < 1e-15);

  const double t = 0.37;
  const SitePairUnitary u0 = interaction_frame_rotation(p, t, cut);
  CHECK((u0.to_dense() * u0.adjoint().to_dense() - identity(36)).cwiseAbs().maxCoeff() < 1e-14);

  const Vec f = fock(2, cut);
  const CompositeState pp = compose(kPlus, kPlus, f, f);
  const Complex phase = std::polar(1.0, -p.u() * t);
  CHECK((apply(u0, pp).amplitudes() - phase * pp.amplitudes()).norm() < 1e-14);
  CHECK((to_lab_frame(pp, p, t).amplitudes() - std::conj(phase) * pp.amplitudes()).norm() < 1e-14);

  const CompositeState pm = compose(kPlus, kMinus, f, f);
  CHECK((apply(u0, pm).amplitudes() - std::polar(1.0, -(p.omega1 - p.omega2) * t) * pm.amplitudes()).norm() < 1e-14);

  const Mat expected = (Complex(0.0, -t) * build_h0(p, cut).to_dense().matrix()).exp();
  CHECK((u0.to_dense() - expected).cwiseAbs().maxCoeff() < 1e-12);
}
