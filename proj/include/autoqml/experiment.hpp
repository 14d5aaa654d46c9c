#pragma once

#include <cstdio>
#include <string>

#include "autoqml/circuit.hpp"
#include "autoqml/discriminator.hpp"

namespace autoqml {

// One grid point of the hyperparameter search.
struct ExperimentSpec {
  std::string spec_id;
  int distribution_index = 0;
  AnsatzFamily ansatz = AnsatzFamily::zoufal;
  int repetitions = 1;
  InitStrategy init;
  int num_qubits = 1;
  DiscriminatorSpec discriminator;
  double generator_lr = 1e-3;
  double beta1 = 0.7, beta2 = 0.99;  // generator Adam betas
  int batch_size = 512;
  int num_epochs = 1;
  int num_training_runs = 1;
};

// Canonical readable identity of a grid point; identical tuples map to
// identical ids, and the grid is ordered by this string.
inline std::string make_spec_id(const ExperimentSpec& s) {
  char lr[32];
  std::snprintf(lr, sizeof lr, "%.6g", s.generator_lr);
  return "d" + std::to_string(s.distribution_index) + "_q" +
         std::to_string(s.num_qubits) + "_" + family_name(s.ansatz) + "_k" +
         std::to_string(s.repetitions) + "_" + init_name(s.init.kind) + "_" +
         s.discriminator.type_name + "_lr" + lr;
}

}  // namespace autoqml
