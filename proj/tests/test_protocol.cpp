// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "entrecip/errors.hpp"
#include "entrecip/protocol.hpp"

using namespace entrecip;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("expected an entrecip::Error");
  return ErrorKind::InvalidParams;
}

const RetrievalResult& find(const std::array<RetrievalResult, 7>& rows, ProjectionKind k) {
  for (const RetrievalResult& r : rows)
    if (r.projection == k) return r;
  throw std::out_of_range("projection");
}

double product_fidelity(const QubitPairState& s, double sign2) {
  const Vec first = (qubit(0) + qubit(1)) / std::sqrt(2.0);
  const Vec second = (qubit(0) + sign2 * qubit(1)) / std::sqrt(2.0);
  const Vec target = tensor({first, second});
  return fidelity(s.as_vector(), target);
}

}  // namespace

TEST_CASE("deposit at t = 0") {
  for (Engine e : {Engine::analytic, Engine::numeric_effective, Engine::numeric_full}) {
    const auto rows = run_deposit(SystemParams{}, 0.0, e);
    CHECK(rows[0].degenerate);
    CHECK(rows[3].degenerate);
    CHECK_FALSE(rows[0].concurrence);
    CHECK(rows[1].outcome_prob == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rows[2].outcome_prob == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rows[0].outcome_prob < 1e-12);
    CHECK(rows[1].concurrence->value < 1e-12);
  }
}

TEST_CASE("deposit at t = 4 produces maximally entangled fields") {
  for (Engine e : {Engine::analytic, Engine::numeric_effective}) {
    const auto rows = run_deposit(SystemParams{}, 4.0, e);
    double total = 0.0;
    for (const DepositResult& r : rows) {
      CHECK_FALSE(r.degenerate);
      CHECK(std::abs(r.concurrence->value - 1.0) < 1e-6);
      CHECK(r.concurrence->value <= 1.0);
      CHECK(r.engine_fidelity >= 1.0 - 1e-8);
      total += r.outcome_prob;
    }
    CHECK(std::abs(total - 1.0) < 1e-10);
  }
}

TEST_CASE("deposit engines agree") {
  const SystemParams p;
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    const auto analytic = run_deposit(p, t, Engine::analytic);
    const auto effective = run_deposit(p, t, Engine::numeric_effective);
    for (int k = 0; k < 4; ++k) {
      CHECK(effective[k].engine_fidelity >= 1.0 - 1e-8);
      CHECK(std::abs(effective[k].outcome_prob - analytic[k].outcome_prob) < 1e-10);
      CHECK(std::abs(effective[k].concurrence->value - analytic[k].concurrence->value) < 1e-6);
    }
  }
}

TEST_CASE("full engine approaches the effective one under strong driving") {
  double previous = 0.0;
  for (double omega : {10.0, 20.0, 50.0}) {
    const SystemParams p{1.0, 1.0, omega, omega};
    const auto rows = run_deposit(p, 1.0, Engine::numeric_full);
    double worst = 1.0;
    for (const DepositResult& r : rows) worst = std::min(worst, r.engine_fidelity);
    CHECK(worst >= previous - 1e-12);
    previous = worst;
  }
  CHECK(previous > 0.99);
}

TEST_CASE("retrieval after a long deposit") {
  const SystemParams p;
  const double t = 4.0;
  for (Engine e : {Engine::analytic, Engine::numeric_effective}) {
    const auto rows = run_retrieval(p, t, Branch::plus, e);
    const RetrievalResult& vac = find(rows, ProjectionKind::vac_vac);
    CHECK(std::abs(vac.concurrence.value - 1.0) < 1e-3);
    CHECK(std::abs(vac.projection_prob - 0.25) < 1e-3);

    const RetrievalResult& mm = find(rows, ProjectionKind::mm);
    CHECK(mm.concurrence.value <= 1e-3);
    CHECK(product_fidelity(mm.atomic_state, 1.0) >= 0.999);

    const RetrievalResult& m0 = find(rows, ProjectionKind::m0);
    CHECK(m0.concurrence.value <= 1e-3);
    CHECK(product_fidelity(m0.atomic_state, -1.0) >= 0.999);

    for (const RetrievalResult& r : rows) {
      CHECK(r.concurrence.value >= 0.0);
      CHECK(r.concurrence.value <= 1.0);
      if (r.projection != ProjectionKind::vac_vac) CHECK(std::abs(r.projection_prob - 0.125) < 1e-6);
      CHECK(std::abs(r.residual_prob) < 1e-5);
    }
  }
}

TEST_CASE("retrieval engines agree") {
  const SystemParams p;
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    for (Branch b : {Branch::plus, Branch::minus}) {
      const auto analytic = run_retrieval(p, t, b, Engine::analytic);
      const auto effective = run_retrieval(p, t, b, Engine::numeric_effective);
      for (int k = 0; k < 7; ++k) {
        CHECK(effective[k].engine_fidelity >= 1.0 - 1e-8);
        CHECK(std::abs(effective[k].projection_prob - analytic[k].projection_prob) < 1e-8);
      }
    }
  }
}

TEST_CASE("every deposit outcome can be retrieved") {
  const SystemParams p;
  const auto deposit = run_deposit(p, 4.0, Engine::analytic);
  for (const DepositResult& d : deposit) {
    const auto rows = run_retrieval(p, 4.0, d.branch, Engine::analytic);
    CHECK(find(rows, ProjectionKind::vac_vac).concurrence.value >= 1.0 - 1e-3);
  }
}

TEST_CASE("retrieval error paths") {
  const SystemParams p;
  CHECK(kind_of([&] { run_retrieval(p, 0.0, Branch::minus, Engine::analytic); }) == ErrorKind::DegenerateBranch);
  CHECK(kind_of([&] { run_retrieval(p, 4.0, Branch::plus, Engine::numeric_effective, FockCutoff(5)); }) ==
        ErrorKind::CutoffTooSmall);
  CHECK(kind_of([&] { run_deposit(p, 4.0, Engine::numeric_effective, FockCutoff(5)); }) == ErrorKind::CutoffTooSmall);
  CHECK(kind_of([&] { run_deposit(p, -1.0, Engine::analytic); }) == ErrorKind::InvalidParams);
}

TEST_CASE("RWA fidelity") {
  const std::vector<double> times = {0.5, 1.0};
  std::vector<SystemParams> params;
  for (double ratio : {10.0, 20.0, 50.0, 100.0}) params.push_back({1.0, 1.0, ratio, ratio});
  const FockCutoff cut(40);
  const auto serial = rwa_validation(params, times, cut, Execution::serial);
  const auto parallel = rwa_validation(params, times, cut, Execution::parallel);
  REQUIRE(serial.size() == 8);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].fidelity == parallel[i].fidelity);
    CHECK(serial[i].ratio == parallel[i].ratio);
  }
  for (std::size_t j = 0; j < times.size(); ++j) {
    for (std::size_t i = 1; i < params.size(); ++i) {
      CHECK(serial[i * times.size() + j].fidelity >= serial[(i - 1) * times.size() + j].fidelity);
    }
    CHECK(serial[3 * times.size() + j].fidelity >= 0.95);
  }

  CHECK(std::abs(rwa_fidelity({0.0, 0.0, 20.0, 20.0}, 1.0, FockCutoff(10)) - 1.0) < 1e-14);
  CHECK(std::abs(rwa_fidelity(SystemParams{}, 0.0, FockCutoff(10)) - 1.0) < 1e-14);
  CHECK(std::abs(rwa_fidelity(SystemParams{}, 1.0, deposit_cutoff(SystemParams{}, 1.0)) -
                 rwa_fidelity(SystemParams{}, 1.0, cut)) < 1e-10);
  CHECK(kind_of([] { rwa_fidelity({1.0, 2.0, 20.0, 20.0}, 1.0, FockCutoff(40)); }) == ErrorKind::InvalidParams);
}
