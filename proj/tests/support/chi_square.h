#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

// Goodness-of-fit helpers for sampling tests, significance level 0.01.
namespace testsupport {

// Upper 0.99 quantiles of chi-square, dof 1..30; Wilson-Hilferty beyond.
inline double chi2_crit_99(int dof) {
  static const double table[] = {
      6.634896601,  9.210340372,  11.34486673, 13.27670414, 15.08627247,
      16.81189383,  18.47530691,  20.09023503, 21.66599433, 23.20925116,
      24.72497031,  26.21696731,  27.68824961, 29.14123774, 30.57791417,
      31.99992691,  33.40866360,  34.80530573, 36.19086913, 37.56623479,
      38.93217268,  40.28936044,  41.63839812, 42.97982015, 44.31410490,
      45.64168267,  46.96294212,  48.27823577, 49.58788447, 50.89218131};
  if (dof >= 1 && dof <= 30) return table[dof - 1];
  const double z99 = 2.3263478740408408;
  const double a = 2.0 / (9.0 * dof);
  const double c = 1.0 - a + z99 * std::sqrt(a);
  return dof * c * c * c;
}

// Pearson statistic with the usual small-expected-count handling: bins with
// expected count < 5 are pooled; if the pool itself stays below 5 it is
// merged into the largest bin. dof = effective bins - 1.
struct Chi2Result {
  double statistic;
  int dof;
  bool pass_at_01;
};

inline Chi2Result chi2_gof(const std::vector<long long>& counts,
                           const std::vector<double>& probs, long long n) {
  std::vector<double> exp_eff;
  std::vector<double> obs_eff;
  double pool_exp = 0.0, pool_obs = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double e = probs[i] * static_cast<double>(n);
    if (e < 5.0) {
      pool_exp += e;
      pool_obs += static_cast<double>(counts[i]);
    } else {
      exp_eff.push_back(e);
      obs_eff.push_back(static_cast<double>(counts[i]));
    }
  }
  if (pool_exp > 0.0) {
    if (pool_exp >= 5.0 || exp_eff.empty()) {
      exp_eff.push_back(pool_exp);
      obs_eff.push_back(pool_obs);
    } else {
      std::size_t big = 0;
      for (std::size_t i = 1; i < exp_eff.size(); ++i)
        if (exp_eff[i] > exp_eff[big]) big = i;
      exp_eff[big] += pool_exp;
      obs_eff[big] += pool_obs;
    }
  }
  double stat = 0.0;
  for (std::size_t i = 0; i < exp_eff.size(); ++i) {
    const double d = obs_eff[i] - exp_eff[i];
    stat += d * d / exp_eff[i];
  }
  const int dof = static_cast<int>(exp_eff.size()) - 1;
  return {stat, dof, dof < 1 || stat <= chi2_crit_99(dof)};
}

}  // namespace testsupport
