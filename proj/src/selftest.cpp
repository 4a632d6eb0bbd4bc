// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#include "entrecip/selftest.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>

#include "entrecip/entanglement.hpp"
#include "entrecip/errors.hpp"
#include "entrecip/protocol.hpp"
#include "entrecip/sweep.hpp"

namespace entrecip {

namespace {

std::string sci(double v) { return fmt::format("{:.3e}", v); }

using Check = std::function<PropertyResult()>;

PropertyResult guarded(const std::string& name, const Check& check) {
  try {
    return check();
  } catch (const Error& e) {
    return {name, false, std::string(to_string(e.kind()))};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

Vec random_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> gauss;
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

const double kProbeTimes[] = {0.5, 1.0, 2.0, 4.0};

}  // namespace

std::vector<PropertyResult> run_selftest(const SelftestOptions& options) {
  const SystemParams& params = options.params;
  std::mt19937_64 rng(options.seed);
  auto cutoff_or = [&](FockCutoff rule) {
    return options.nmax_override ? FockCutoff(*options.nmax_override) : rule;
  };
  std::vector<PropertyResult> out;

  out.push_back(guarded("ecs_concurrence_matches_oracle", [&] {
    double worst = 0.0;
    for (double lambda : {0.5, 1.0, 2.0}) {
      SystemParams p = params;
      p.lambda1 = p.lambda2 = lambda;
      for (Branch b : {Branch::plus, Branch::minus}) {
        for (int i = 1; i <= 500; ++i) {
          const EcsState s = deposit_state_analytic(p, 4.0 * i / 500.0, b).state;
          worst = std::max(worst, std::abs(ecs_concurrence(s, b).value - schmidt_oracle(s).value));
        }
      }
    }
    return PropertyResult{"ecs_concurrence_matches_oracle", worst <= 1e-10, "max |diff| " + sci(worst)};
  }));

  out.push_back(guarded("wootters_matches_pure_det", [&] {
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const Vec psi = random_vector(rng, 4);
      QubitPairState q;
      for (int k = 0; k < 4; ++k) q.amplitudes[k] = psi(k);
      q.normalized = true;
      const Mat rho = psi * psi.adjoint();
      worst = std::max(worst, std::abs(wootters_concurrence(rho).value - pure2q_concurrence(q).value));
    }
    return PropertyResult{"wootters_matches_pure_det", worst <= 1e-8, "max |diff| " + sci(worst)};
  }));

  out.push_back(guarded("evolution_is_unitary", [&] {
    const FockCutoff cutoff = cutoff_or(FockCutoff(12));
    const auto h = build_full_hamiltonian(params, cutoff);
    std::uniform_real_distribution<double> time(0.0, 10.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const CompositeState psi(random_vector(rng, 4 * cutoff.nmax() * cutoff.nmax()), cutoff, AtomBasis::bare);
      worst = std::max(worst, std::abs(evolve(psi, h, time(rng)).norm() - 1.0));
    }
    return PropertyResult{"evolution_is_unitary", worst <= 1e-9, "max |norm - 1| " + sci(worst)};
  }));

  out.push_back(guarded("drive_commutes_with_effective_hamiltonian", [&] {
    const FockCutoff cutoff(8);
    const Mat h0 = build_h0(params, cutoff).to_dense().matrix();
    const Mat heff = build_effective_hamiltonian(params, cutoff).to_dense().matrix();
    const double worst = (h0 * heff - heff * h0).cwiseAbs().maxCoeff();
    return PropertyResult{"drive_commutes_with_effective_hamiltonian", worst <= 1e-12, "max |[H0, Heff]| " + sci(worst)};
  }));

  out.push_back(guarded("deposit_probabilities_complete", [&] {
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double t = 5.0 * i / 400.0;
      const double total = 2.0 * (norm_const(params, t, Branch::plus) + norm_const(params, t, Branch::minus)) / 8.0;
      worst = std::max(worst, std::abs(total - 1.0));
    }
    return PropertyResult{"deposit_probabilities_complete", worst <= 1e-12, "max |sum - 1| " + sci(worst)};
  }));

  out.push_back(guarded("deposit_engines_agree", [&] {
    double worst = 1.0;
    for (double t : kProbeTimes) {
      for (const DepositResult& r : run_deposit(params, t, Engine::numeric_effective, cutoff_or(deposit_cutoff(params, t)))) {
        if (!r.degenerate) worst = std::min(worst, r.engine_fidelity);
      }
    }
    return PropertyResult{"deposit_engines_agree", worst >= 1.0 - 1e-8, "min fidelity 1 - " + sci(1.0 - worst)};
  }));

  out.push_back(guarded("retrieval_engines_agree", [&] {
    double worst = 1.0;
    for (double t : kProbeTimes) {
      for (Branch b : {Branch::plus, Branch::minus}) {
        for (const RetrievalResult& r :
             run_retrieval(params, t, b, Engine::numeric_effective, cutoff_or(retrieval_cutoff(params, t)))) {
          worst = std::min(worst, r.engine_fidelity);
        }
      }
    }
    return PropertyResult{"retrieval_engines_agree", worst >= 1.0 - 1e-8, "min fidelity 1 - " + sci(1.0 - worst)};
  }));

  out.push_back(guarded("p_coeffs_match_fock_inner_products", [&] {
    double worst = 0.0;
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const FockCutoff cutoff = cutoff_or(retrieval_cutoff(params, t));
      for (Branch b : {Branch::plus, Branch::minus}) {
        const RetrievalState state = retrieval_state_analytic(params, t, t, b);
        for (ProjectionKind k : kAllProjections) {
          const auto beta = projection_amplitudes(params, t, k);
          const Vec projector = tensor({coherent_state(beta[0], cutoff), coherent_state(beta[1], cutoff)});
          const QubitPairState p = p_coeffs(params, t, b, k);
          for (int s = 0; s < 4; ++s) {
            const Complex numeric = projector.dot(state.sectors[s].field.to_fock(cutoff));
            worst = std::max(worst, std::abs(numeric - p.amplitudes[s]));
          }
        }
      }
    }
    return PropertyResult{"p_coeffs_match_fock_inner_products", worst <= 1e-10, "max |diff| " + sci(worst)};
  }));

  out.push_back(guarded("rwa_fidelity_monotone_in_drive", [&] {
    std::vector<SystemParams> list;
    for (double ratio : {10.0, 20.0, 50.0, 100.0}) {
      SystemParams p;
      p.lambda1 = p.lambda2 = 1.0;
      p.omega1 = p.omega2 = ratio;
      list.push_back(p);
    }
    const double t_grid[] = {1.0};
    const auto rows = rwa_validation(list, t_grid, cutoff_or(FockCutoff(40)), Execution::serial);
    bool monotone = true;
    for (std::size_t i = 1; i < rows.size(); ++i) monotone = monotone && rows[i].fidelity >= rows[i - 1].fidelity;
    const bool pass = monotone && rows.back().fidelity >= 0.95;
    std::string measured;
    for (const RwaRow& r : rows) measured += fmt::format("{}:{:.9f} ", r.ratio, r.fidelity);
    return PropertyResult{"rwa_fidelity_monotone_in_drive", pass, measured};
  }));

  out.push_back(guarded("concurrence_outputs_in_unit_interval", [&] {
    TimeGrid grid{0.0, 5.0, 400};
    double lo = 1.0;
    double hi = 0.0;
    for (const Fig1Row& r : sweep_fig1(params, grid, Branch::minus, Execution::serial)) {
      for (const auto& c : {r.concurrence_analytic, r.concurrence_oracle}) {
        if (c) {
          lo = std::min(lo, *c);
          hi = std::max(hi, *c);
        }
      }
    }
    const ProjectionKind kinds[] = {ProjectionKind::vac_vac, ProjectionKind::mm, ProjectionKind::m0};
    for (const RetrievalRow& r : sweep_retrieval(params, grid, Branch::plus, kinds, Engine::analytic, std::nullopt,
                                                 Execution::serial)) {
      if (r.concurrence) {
        lo = std::min(lo, *r.concurrence);
        hi = std::max(hi, *r.concurrence);
      }
    }
    return PropertyResult{"concurrence_outputs_in_unit_interval", lo >= 0.0 && hi <= 1.0,
                          fmt::format("range [{:.6f}, {:.12f}]", lo, hi)};
  }));

  return out;
}

void write_report(std::ostream& os, const std::vector<PropertyResult>& results) {
  int failed = 0;
  for (const PropertyResult& r : results) {
    os << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.measured << '\n';
    if (!r.pass) ++failed;
  }
  os << results.size() - failed << "/" << results.size() << " properties passed\n";
}

}  // namespace entrecip
