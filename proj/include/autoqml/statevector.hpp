#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "autoqml/errors.hpp"
#include "autoqml/rng.hpp"

namespace autoqml {

using cdouble = std::complex<double>;

// Dense statevector over 2^N basis states.  Basis index is the integer
// reading of the qubit bitstring with qubit 0 least significant.
struct StateVector {
  int num_qubits = 0;
  std::vector<cdouble> amplitudes;

  static StateVector zero_state(int n) {
    check_qubits(n);
    StateVector s;
    s.num_qubits = n;
    s.amplitudes.assign(std::size_t{1} << n, cdouble{0.0, 0.0});
    s.amplitudes[0] = 1.0;
    return s;
  }

  static StateVector uniform_state(int n) {
    check_qubits(n);
    StateVector s;
    s.num_qubits = n;
    const double amp = std::pow(2.0, -0.5 * n);
    s.amplitudes.assign(std::size_t{1} << n, cdouble{amp, 0.0});
    return s;
  }

  std::size_t dim() const { return amplitudes.size(); }

  double norm() const {
    double acc = 0.0;
    for (const auto& a : amplitudes) acc += std::norm(a);
    return std::sqrt(acc);
  }

  static void check_qubits(int n) {
    if (n < 1 || n > 12)
      throw QubitCountOutOfRange("num_qubits must be in [1, 12], got " +
                                 std::to_string(n));
  }
};

namespace gates {

// Single-qubit 2x2 unitary applied to qubit q.
inline void apply_1q(StateVector& s, int q, const cdouble u[2][2]) {
  const std::size_t step = std::size_t{1} << q;
  const std::size_t dim = s.dim();
  for (std::size_t base = 0; base < dim; base += 2 * step) {
    for (std::size_t i0 = base; i0 < base + step; ++i0) {
      const std::size_t i1 = i0 | step;
      const cdouble a0 = s.amplitudes[i0];
      const cdouble a1 = s.amplitudes[i1];
      s.amplitudes[i0] = u[0][0] * a0 + u[0][1] * a1;
      s.amplitudes[i1] = u[1][0] * a0 + u[1][1] * a1;
    }
  }
}

inline void h(StateVector& s, int q) {
  constexpr double r = 0.70710678118654752440;
  const cdouble u[2][2] = {{r, r}, {r, -r}};
  apply_1q(s, q, u);
}

inline void x(StateVector& s, int q) {
  const cdouble u[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
  apply_1q(s, q, u);
}

// sqrt(X): (1/2) [[1+i, 1-i], [1-i, 1+i]]
inline void sx(StateVector& s, int q) {
  const cdouble p{0.5, 0.5}, m{0.5, -0.5};
  const cdouble u[2][2] = {{p, m}, {m, p}};
  apply_1q(s, q, u);
}

inline void ry(StateVector& s, int q, double theta) {
  const double c = std::cos(theta / 2.0), sn = std::sin(theta / 2.0);
  const cdouble u[2][2] = {{c, -sn}, {sn, c}};
  apply_1q(s, q, u);
}

inline void rz(StateVector& s, int q, double theta) {
  const cdouble e0 = std::polar(1.0, -theta / 2.0);
  const cdouble e1 = std::polar(1.0, theta / 2.0);
  const cdouble u[2][2] = {{e0, 0.0}, {0.0, e1}};
  apply_1q(s, q, u);
}

inline void cx(StateVector& s, int control, int target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  const std::size_t dim = s.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(s.amplitudes[i], s.amplitudes[i | tbit]);
    }
  }
}

inline void cz(StateVector& s, int a, int b) {
  const std::size_t abit = std::size_t{1} << a;
  const std::size_t bbit = std::size_t{1} << b;
  const std::size_t dim = s.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & abit) && (i & bbit)) s.amplitudes[i] = -s.amplitudes[i];
  }
}

inline void swap_qubits(StateVector& s, int a, int b) {
  const std::size_t abit = std::size_t{1} << a;
  const std::size_t bbit = std::size_t{1} << b;
  const std::size_t dim = s.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    const bool ba = i & abit, bb = i & bbit;
    if (ba && !bb) {
      const std::size_t j = (i & ~abit) | bbit;
      std::swap(s.amplitudes[i], s.amplitudes[j]);
    }
  }
}

}  // namespace gates

inline std::vector<double> analytic_probabilities(const StateVector& s) {
  std::vector<double> p(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) p[i] = std::norm(s.amplitudes[i]);
  // Renormalize with a pairwise sum. Besides absorbing norm drift from long
  // gate sequences, pairwise addition over a power-of-two length is exact
  // when all entries are equal, so a uniform state yields exactly 2^-N.
  std::vector<double> partial = p;
  while (partial.size() > 1) {
    for (std::size_t i = 0; i < partial.size() / 2; ++i)
      partial[i] = partial[2 * i] + partial[2 * i + 1];
    partial.resize(partial.size() / 2);
  }
  const double total = partial[0];
  for (auto& v : p) v /= total;
  return p;
}

// i.i.d. index draws from a probability vector via inverse CDF.
inline std::vector<int> sample_from_pmf(const std::vector<double>& p,
                                        int n_samples, Rng& rng) {
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;  // guard against rounding shortfall

  std::vector<int> out(static_cast<std::size_t>(n_samples));
  for (auto& v : out) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    v = static_cast<int>(it - cdf.begin());
  }
  return out;
}

// i.i.d. Born-rule draws via inverse CDF over the analytic probabilities.
inline std::vector<int> born_sample(const StateVector& s, int n_samples,
                                    Rng& rng) {
  return sample_from_pmf(analytic_probabilities(s), n_samples, rng);
}

// Eq-style affine map from basis index to the data range:
//   phi(x) = a + (b - a) / (2^N - 1) * x
// The endpoint branches make phi(0) == a and phi(2^N-1) == b bit-exact, and
// the multiply-before-divide form keeps the identity case (a=0, b=2^N-1)
// exact for every representable x.
inline double map_to_range(std::int64_t x, double a, double b, int N) {
  if (a >= b) throw DegenerateRange("map_to_range requires a < b");
  const std::int64_t m = (std::int64_t{1} << N) - 1;
  if (x == 0) return a;
  if (x == m) return b;
  return a + (b - a) * static_cast<double>(x) / static_cast<double>(m);
}

}  // namespace autoqml
