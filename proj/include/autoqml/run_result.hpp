#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autoqml/circuit.hpp"
#include "autoqml/discriminator.hpp"

namespace autoqml {

// Per-run resource ceilings: b_C as wall time, b_Q as circuit evaluations.
struct TrainingBudget {
  double max_wall_seconds = 3600.0;
  long long max_circuit_evaluations = 1'000'000'000LL;
};

// Everything one training run produces. Failed runs keep ok = false and the
// error text; numeric fields stay at their defaults. wall_seconds is
// measured for budget enforcement but excluded from serialized blobs so
// same-seed reruns stay byte-identical.
struct RunResult {
  std::string spec_id;
  int run_index = 0;
  std::uint64_t seed = 0;
  bool ok = true;
  std::string error;

  int epochs_completed = 0;
  std::vector<double> generator_loss_curve;
  std::vector<double> discriminator_loss_curve;
  std::vector<double> entropy_curve;
  double final_ks = 0.0;
  double final_re = 0.0;
  int transpiled_depth = 0;
  double wall_seconds = 0.0;
  long long circuit_evaluations = 0;
  std::vector<double> final_generator_params;
  bool budget_exhausted = false;

  // carried along for model persistence
  InitRealization init;
  DiscriminatorNet discriminator;
};

}  // namespace autoqml
