#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "autoqml/errors.hpp"

namespace autoqml {

// First/second moment estimates for one flat parameter vector plus the step
// counter. Epsilon sits outside the square root; updates use bias-corrected
// moments.
struct AdamState {
  std::vector<double> m, v;
  long step_count = 0;
  double lr;
  double beta1, beta2;
  double epsilon = 1e-8;

  AdamState(std::size_t n, double lr_, double b1, double b2)
      : m(n, 0.0), v(n, 0.0), lr(lr_), beta1(b1), beta2(b2) {}
};

inline void adam_step(AdamState& st, std::vector<double>& params,
                      const std::vector<double>& grads) {
  if (params.size() != st.m.size() || grads.size() != st.m.size())
    throw LengthMismatch("adam_step: params/grads/state lengths differ");
  st.step_count += 1;
  const double bc1 = 1.0 - std::pow(st.beta1, static_cast<double>(st.step_count));
  const double bc2 = 1.0 - std::pow(st.beta2, static_cast<double>(st.step_count));
  for (std::size_t i = 0; i < params.size(); ++i) {
    st.m[i] = st.beta1 * st.m[i] + (1.0 - st.beta1) * grads[i];
    st.v[i] = st.beta2 * st.v[i] + (1.0 - st.beta2) * grads[i] * grads[i];
    const double mh = st.m[i] / bc1;
    const double vh = st.v[i] / bc2;
    params[i] -= st.lr * mh / (std::sqrt(vh) + st.epsilon);
  }
}

}  // namespace autoqml
