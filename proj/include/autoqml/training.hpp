#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "autoqml/adam.hpp"
#include "autoqml/circuit.hpp"
#include "autoqml/data.hpp"
#include "autoqml/discriminator.hpp"
#include "autoqml/errors.hpp"
#include "autoqml/experiment.hpp"
#include "autoqml/metrics.hpp"
#include "autoqml/rng.hpp"
#include "autoqml/run_result.hpp"
#include "autoqml/statevector.hpp"
#include "autoqml/transpile.hpp"

namespace autoqml {

namespace detail {

// log D at every grid value phi(x), clamped like the losses.
inline std::vector<double> log_disc_on_grid(const DiscriminatorNet& net, int N,
                                            double a, double b) {
  const std::size_t dim = std::size_t{1} << N;
  std::vector<double> logd(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const double p = disc_forward(net, map_to_range(static_cast<int>(x), a, b, N));
    logd[x] = std::log(std::clamp(p, kProbClamp, 1.0 - kProbClamp));
  }
  return logd;
}

inline std::vector<double> generator_probs(const StateVector& init_state,
                                           const CircuitTemplate& t,
                                           const std::vector<double>& params) {
  return analytic_probabilities(apply_circuit(init_state, t, params));
}

// Parameter-shift gradient of -sum_x p_theta(x) * logd[x]: each component
// uses p at theta_j +- pi/2 with a factor 1/2 (2 evaluations per parameter).
inline std::vector<double> param_shift_grad(const StateVector& init_state,
                                            const CircuitTemplate& t,
                                            const std::vector<double>& params,
                                            const std::vector<double>& logd) {
  constexpr double half_pi = 1.57079632679489661923;
  std::vector<double> grad(params.size(), 0.0);
  std::vector<double> shifted = params;
  for (std::size_t j = 0; j < params.size(); ++j) {
    shifted[j] = params[j] + half_pi;
    const auto plus = generator_probs(init_state, t, shifted);
    shifted[j] = params[j] - half_pi;
    const auto minus = generator_probs(init_state, t, shifted);
    shifted[j] = params[j];
    double g = 0.0;
    for (std::size_t x = 0; x < logd.size(); ++x)
      g -= (plus[x] - minus[x]) / 2.0 * logd[x];
    grad[j] = g;
  }
  return grad;
}

}  // namespace detail

struct GeneratorLossGrad {
  double g_loss = 0.0;
  std::vector<double> grad;
  long long circuit_evaluations = 0;  // 1 + 2 * num_params
};

// Non-saturating generator loss L_G = -sum_x p_theta(x) log D(phi(x)) from
// analytic probabilities, with its parameter-shift gradient.
inline GeneratorLossGrad generator_loss_and_grad(
    const CircuitTemplate& t, const StateVector& init_state,
    const std::vector<double>& params, const DiscriminatorNet& net, double a,
    double b) {
  if (static_cast<int>(params.size()) != t.num_params)
    throw ParamLengthMismatch("generator_loss_and_grad: wrong param count");
  const int N = t.descriptor.num_qubits;
  const auto logd = detail::log_disc_on_grid(net, N, a, b);
  const auto probs = detail::generator_probs(init_state, t, params);
  GeneratorLossGrad out;
  for (std::size_t x = 0; x < probs.size(); ++x)
    out.g_loss -= probs[x] * logd[x];
  out.grad = detail::param_shift_grad(init_state, t, params, logd);
  out.circuit_evaluations = 1 + 2 * static_cast<long long>(params.size());
  return out;
}

// One full adversarial training run. Per epoch: one discriminator Adam step
// on a sampled real batch vs a Born-sampled fake batch, then one generator
// Adam step from the analytic-probability loss. Discriminator inputs live on
// the [-1, 1]-scaled grid. Budgets are checked before each epoch; with P
// generator parameters an epoch costs 1 + 2P circuit evaluations.
inline RunResult train_qgan(const ExperimentSpec& spec,
                            const TargetDistribution& target,
                            const TrainingBudget& budget, Rng& rng) {
  const int N = spec.num_qubits;
  if (target.bin_probabilities.size() != (std::size_t{1} << N))
    throw BinMismatch("target bin count != 2^num_qubits");

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&t0] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  RunResult res;
  res.spec_id = spec.spec_id;
  res.seed = rng.seed();

  const CircuitTemplate tmpl =
      build_ansatz({spec.ansatz, N, spec.repetitions});
  res.transpiled_depth = transpile_depth(tmpl);

  // bin-index moments of the target, the data-driven fallback for normal init
  double mean_idx = 0.0;
  for (std::size_t i = 0; i < target.bin_probabilities.size(); ++i)
    mean_idx += static_cast<double>(i) * target.bin_probabilities[i];
  double var_idx = 0.0;
  for (std::size_t i = 0; i < target.bin_probabilities.size(); ++i) {
    const double d = static_cast<double>(i) - mean_idx;
    var_idx += d * d * target.bin_probabilities[i];
  }
  res.init = resolve_init(spec.init, N, mean_idx, std::sqrt(var_idx), rng);
  const StateVector init_state = state_from_realization(res.init, N);

  res.discriminator = init_discriminator(spec.discriminator, rng);
  AdamState g_adam(tmpl.num_params, spec.generator_lr, spec.beta1, spec.beta2);
  AdamState d_adam(res.discriminator.num_params(), spec.discriminator.lr,
                   spec.discriminator.beta1, spec.discriminator.beta2);

  std::vector<double> theta(tmpl.num_params, 0.0);
  const long long evals_per_epoch = 1 + 2 * static_cast<long long>(theta.size());

  // discriminator inputs: grid values affinely scaled onto [-1, 1]
  auto scaled = [N](const std::vector<int>& bins) {
    std::vector<double> vals(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i)
      vals[i] = map_to_range(bins[i], -1.0, 1.0, N);
    return vals;
  };

  for (int epoch = 0; epoch < spec.num_epochs; ++epoch) {
    if (elapsed() >= budget.max_wall_seconds ||
        res.circuit_evaluations >= budget.max_circuit_evaluations) {
      res.budget_exhausted = true;
      break;
    }
    const auto probs = detail::generator_probs(init_state, tmpl, theta);
    res.entropy_curve.push_back(kl_divergence(target.bin_probabilities, probs));

    const auto fake = scaled(sample_from_pmf(probs, spec.batch_size, rng));
    const auto real =
        scaled(sample_from_pmf(target.bin_probabilities, spec.batch_size, rng));

    const DiscGradients dg = disc_backward(res.discriminator, real, fake);
    res.discriminator_loss_curve.push_back(dg.d_loss);
    auto flat = disc_pack(res.discriminator);
    adam_step(d_adam, flat, pack_disc_gradients(dg));
    disc_unpack(res.discriminator, flat);

    const auto logd = detail::log_disc_on_grid(res.discriminator, N, -1.0, 1.0);
    double g_loss = 0.0;
    for (std::size_t x = 0; x < probs.size(); ++x)
      g_loss -= probs[x] * logd[x];
    res.generator_loss_curve.push_back(g_loss);

    const auto grad = detail::param_shift_grad(init_state, tmpl, theta, logd);
    adam_step(g_adam, theta, grad);

    res.circuit_evaluations += evals_per_epoch;
    res.epochs_completed += 1;
  }

  res.final_generator_params = theta;
  if (!res.entropy_curve.empty()) res.final_re = res.entropy_curve.back();

  // Final two-sample KS: fresh Born samples of the trained generator against
  // a resample of the raw data (fixed substreams, not counted as budget).
  const StateVector final_state = apply_circuit(init_state, tmpl, theta);
  Rng gen_rng = rng.substream("final-ks-gen");
  Rng real_rng = rng.substream("final-ks-real");
  const auto gen_bins = born_sample(final_state, 10000, gen_rng);
  std::vector<double> gen_vals(gen_bins.size());
  for (std::size_t i = 0; i < gen_bins.size(); ++i)
    gen_vals[i] = map_to_range(gen_bins[i], target.a, target.b, N);
  res.final_ks = ks_statistic(gen_vals, resample(target, 10000, real_rng));

  res.wall_seconds = elapsed();
  return res;
}

}  // namespace autoqml
