#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <vector>

#include "autoqml/circuit.hpp"
#include "autoqml/statevector.hpp"

namespace autoqml {

// Meyer-Wallach entanglement measure Q(psi) = 2 (1 - (1/N) sum_q Tr rho_q^2)
// where rho_q is the single-qubit reduced density matrix of qubit q.
inline double meyer_wallach(const StateVector& s) {
  const int n = s.num_qubits;
  if (n < 2) throw SingleQubit("Meyer-Wallach needs at least 2 qubits");
  const std::size_t dim = s.dim();

  double purity_sum = 0.0;
  for (int q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    // rho_q = [[p00, c], [conj(c), p11]]
    double p00 = 0.0, p11 = 0.0;
    cdouble c{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const cdouble a0 = s.amplitudes[i];
      const cdouble a1 = s.amplitudes[i | bit];
      p00 += std::norm(a0);
      p11 += std::norm(a1);
      c += a0 * std::conj(a1);
    }
    purity_sum += p00 * p00 + p11 * p11 + 2.0 * std::norm(c);
  }
  // Q lies in [0, 1]; rounding can push the purity average past 1 by ~1e-16
  // for product states, so clamp at zero.
  return std::max(0.0, 2.0 * (1.0 - purity_sum / n));
}

// Mean Meyer-Wallach Q of U(theta)|0...0> over parameter vectors drawn
// uniformly from [-pi, pi)^P.
inline double entangling_capability(const CircuitTemplate& t,
                                    int n_param_samples, Rng& rng) {
  const int n = t.descriptor.num_qubits;
  if (n < 2)
    throw SingleQubit("entangling_capability undefined for a single qubit");
  constexpr double pi = 3.14159265358979323846;

  double acc = 0.0;
  std::vector<double> params(t.num_params);
  const StateVector zero = StateVector::zero_state(n);
  for (int i = 0; i < n_param_samples; ++i) {
    for (auto& p : params) p = rng.uniform(-pi, pi);
    acc += meyer_wallach(apply_circuit(zero, t, params));
  }
  return acc / n_param_samples;
}

}  // namespace autoqml
