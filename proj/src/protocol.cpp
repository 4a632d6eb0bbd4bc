// Copyright 2026 The entrecip Authors
// SPDX-License-Identifier: Apache-2.0

#include "entrecip/protocol.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "entrecip/errors.hpp"
#include "parallel_rows.hpp"

namespace entrecip {

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::analytic: return "analytic";
    case Engine::numeric_effective: return "effective";
    case Engine::numeric_full: return "full";
  }
  return "?";
}

std::optional<Engine> parse_engine(std::string_view s) {
  if (s == "analytic") return Engine::analytic;
  if (s == "effective" || s == "numeric_effective") return Engine::numeric_effective;
  if (s == "full" || s == "numeric_full") return Engine::numeric_full;
  return std::nullopt;
}

FockCutoff deposit_cutoff(const SystemParams& params, double t) {
  return FockCutoff::for_amplitude(0.5 * std::max(params.lambda1, params.lambda2) * t);
}

FockCutoff retrieval_cutoff(const SystemParams& params, double t) {
  return FockCutoff::for_amplitude(std::max(params.lambda1, params.lambda2) * t);
}

CompositeState deposit_initial_state(FockCutoff cutoff) {
  const Vec vac = fock(0, cutoff);
  const Vec g = qubit(0);
  const Vec e = qubit(1);
  const Vec amps = (compose(e, g, vac, vac).amplitudes() + compose(g, e, vac, vac).amplitudes()) / std::sqrt(2.0);
  return CompositeState(amps, cutoff, AtomBasis::bare);
}

namespace {

void check_time(double t) {
  if (!std::isfinite(t) || t < 0.0) throw Error(ErrorKind::InvalidParams, "time must be finite and >= 0");
}

// Interaction-frame state U0(t)^dag exp(-i H t) |psi> for the numeric engines.
CompositeState interaction_frame_evolution(const CompositeState& psi, const SystemParams& params, double t,
                                           Engine engine) {
  switch (engine) {
    case Engine::numeric_effective:
      return evolve(psi, build_effective_hamiltonian(params, psi.cutoff()), t);
    case Engine::numeric_full: {
      const CompositeState lab = evolve(psi, build_full_hamiltonian(params, psi.cutoff()), t);
      return apply(interaction_frame_rotation(params, t, psi.cutoff()).adjoint(), lab);
    }
    case Engine::analytic: break;
  }
  throw Error(ErrorKind::InvalidParams, "numeric engine required");
}

// Amplitude check: the largest coherent label a stage produces must survive
// truncation.
void require_cutoff(double max_abs_alpha, FockCutoff cutoff) { (void)coherent_state(max_abs_alpha, cutoff); }

}  // namespace

CompositeState deposit_evolved(const SystemParams& params, double t, Engine engine, FockCutoff cutoff) {
  params.validate();
  check_time(t);
  require_cutoff(0.5 * std::max(params.lambda1, params.lambda2) * t, cutoff);
  const CompositeState interaction = interaction_frame_evolution(deposit_initial_state(cutoff), params, t, engine);
  return to_lab_frame(interaction, params, t);
}

std::array<DepositResult, 4> run_deposit(const SystemParams& params, double t, Engine engine,
                                         std::optional<FockCutoff> cutoff_override) {
  params.validate();
  check_time(t);
  const FockCutoff cutoff = cutoff_override.value_or(deposit_cutoff(params, t));
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::optional<CompositeState> evolved;
  if (engine != Engine::analytic) evolved = deposit_evolved(params, t, engine, cutoff);

  auto result_for = [&](AtomicOutcome outcome) {
    const Branch branch = branch_of(outcome);
    DepositResult r{outcome, branch, std::nullopt, Vec(), std::nullopt, 0.0, nan, false};

    std::optional<DepositAnalytic> analytic;
    if (norm_const(params, t, branch) >= kDegenerateNorm) analytic = deposit_state_analytic(params, t, branch);

    if (engine == Engine::analytic) {
      r.outcome_prob = norm_const(params, t, branch) / 8.0;
      if (!analytic) {
        r.degenerate = true;
        return r;
      }
      r.field_state = analytic->state;
      r.field_state_numeric = analytic->state.to_fock(cutoff);
      r.concurrence = ecs_concurrence(analytic->state, branch);
      r.engine_fidelity = 1.0;
      return r;
    }

    const auto lv = levels(outcome);
    const Vec field = evolved->field_component(lv[0], lv[1]);
    r.outcome_prob = field.squaredNorm();
    if (8.0 * r.outcome_prob < kDegenerateNorm || !analytic) {
      r.degenerate = true;
      return r;
    }
    r.field_state = analytic->state;
    r.field_state_numeric = field / field.norm();
    r.concurrence = fock_concurrence(r.field_state_numeric, cutoff);
    r.engine_fidelity = fidelity(analytic->state.to_fock(cutoff), r.field_state_numeric);
    return r;
  };

  return {result_for(AtomicOutcome::gg), result_for(AtomicOutcome::ge), result_for(AtomicOutcome::eg),
          result_for(AtomicOutcome::ee)};
}

std::array<RetrievalResult, 7> run_retrieval(const SystemParams& params, double t, Branch branch, Engine engine,
                                             std::optional<FockCutoff> cutoff_override) {
  params.validate();
  check_time(t);
  const DepositAnalytic input = deposit_state_analytic(params, t, branch);

  std::array<QubitPairState, 7> reference;
  std::array<double, 7> reference_prob{};
  for (std::size_t k = 0; k < 7; ++k) {
    reference[k] = bare_amplitudes(p_coeffs(params, t, branch, kAllProjections[k]));
    reference_prob[k] = projection_probability(params, t, branch, kAllProjections[k]);
  }

  std::array<QubitPairState, 7> atomic = reference;
  std::array<double, 7> prob = reference_prob;
  if (engine != Engine::analytic) {
    const FockCutoff cutoff = cutoff_override.value_or(retrieval_cutoff(params, t));
    require_cutoff(std::max(params.lambda1, params.lambda2) * t, cutoff);
    const CompositeState start = compose(qubit(0), qubit(0), input.state.to_fock(cutoff), cutoff);
    const CompositeState evolved = interaction_frame_evolution(start, params, t, engine);
    for (std::size_t k = 0; k < 7; ++k) {
      const auto beta = projection_amplitudes(params, t, kAllProjections[k]);
      const Vec projector = tensor({coherent_state(beta[0], cutoff), coherent_state(beta[1], cutoff)});
      QubitPairState s;
      s.amplitudes = evolved.project_fields(projector);
      s.basis = AtomBasis::bare;
      prob[k] = s.norm_sq();
      if (prob[k] < 1e-24) throw Error(ErrorKind::ZeroState, "projection leaves no atomic state");
      const double scale = 1.0 / std::sqrt(prob[k]);
      for (Complex& a : s.amplitudes) a *= scale;
      s.normalized = true;
      atomic[k] = s;
    }
  }

  double total = 0.0;
  for (double p : prob) total += p;

  auto result_for = [&](std::size_t k) {
    return RetrievalResult{kAllProjections[k],
                           atomic[k],
                           pure2q_concurrence(atomic[k]),
                           prob[k],
                           1.0 - total,
                           fidelity(reference[k].as_vector(), atomic[k].as_vector())};
  };
  return {result_for(0), result_for(1), result_for(2), result_for(3), result_for(4), result_for(5), result_for(6)};
}

double rwa_fidelity(const SystemParams& params, double t, FockCutoff cutoff) {
  params.validate();
  check_time(t);
  if (params.lambda1 != params.lambda2 || params.omega1 != params.omega2) {
    throw Error(ErrorKind::InvalidParams, "RWA study expects identical sites");
  }
  require_cutoff(0.5 * params.lambda1 * t, cutoff);
  const CompositeState psi0 = deposit_initial_state(cutoff);
  const CompositeState full = evolve(psi0, build_full_hamiltonian(params, cutoff), t);
  const CompositeState effective =
      apply(interaction_frame_rotation(params, t, cutoff), evolve(psi0, build_effective_hamiltonian(params, cutoff), t));
  return fidelity(full.amplitudes(), effective.amplitudes());
}

std::vector<RwaRow> rwa_validation(std::span<const SystemParams> params_list, std::span<const double> t_grid,
                                   std::optional<FockCutoff> cutoff, Execution execution) {
  const long n_t = static_cast<long>(t_grid.size());
  std::vector<RwaRow> rows(params_list.size() * t_grid.size());
  detail::for_each_row(static_cast<long>(rows.size()), execution, [&](long i) {
    const SystemParams& p = params_list[i / n_t];
    const double t = t_grid[i % n_t];
    const double ratio = p.lambda1 > 0.0 ? p.omega1 / p.lambda1 : std::numeric_limits<double>::infinity();
    rows[i] = {ratio, t, rwa_fidelity(p, t, cutoff.value_or(deposit_cutoff(p, t)))};
  });
  return rows;
}

}  // namespace entrecip
