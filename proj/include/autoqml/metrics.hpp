#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "autoqml/errors.hpp"
#include "autoqml/run_result.hpp"

namespace autoqml {

// Relative entropy D(P||Q) = sum_{P(x)>0} P(x) ln(P(x)/Q(x)), natural log,
// Q clamped below at 1e-12 so empty model bins stay finite.
inline double kl_divergence(const std::vector<double>& P,
                            const std::vector<double>& Q) {
  if (P.size() != Q.size())
    throw LengthMismatch("kl_divergence: length mismatch");
  double sp = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (P[i] < 0.0 || Q[i] < 0.0)
      throw NotNormalized("kl_divergence: negative probability entry");
    sp += P[i];
    sq += Q[i];
  }
  if (std::abs(sp - 1.0) > 1e-8 || std::abs(sq - 1.0) > 1e-8)
    throw NotNormalized("kl_divergence: inputs must each sum to 1");
  double acc = 0.0;
  for (std::size_t i = 0; i < P.size(); ++i)
    if (P[i] > 0.0) acc += P[i] * std::log(P[i] / std::max(Q[i], 1e-12));
  // Gibbs' inequality guarantees >= 0; rounding can undershoot by ~1e-16.
  return std::max(0.0, acc);
}

// Two-sample Kolmogorov-Smirnov statistic: sup_x |ECDF_a(x) - ECDF_b(x)|.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty())
    throw EmptySample("ks_statistic: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

// Per-spec statistics over repeated runs (population mean/std).
struct AggregateStats {
  std::string spec_id;
  double mu_ks = 0.0, sigma_ks = 0.0;
  double mu_re = 0.0, sigma_re = 0.0;
  double mu_depth = 0.0, sigma_depth = 0.0;
  double mu_loss = 0.0, sigma_loss = 0.0;
  int n_runs = 0;
};

namespace detail {
inline void mean_std(const std::vector<double>& xs, double& mu, double& sigma) {
  mu = 0.0;
  for (double x : xs) mu += x;
  mu /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mu) * (x - mu);
  sigma = std::sqrt(var / static_cast<double>(xs.size()));
}
}  // namespace detail

// Aggregates the successful runs of one spec; failed entries are excluded
// and n_runs counts only successes.
inline AggregateStats aggregate_runs(const std::vector<RunResult>& results) {
  if (results.empty()) throw EmptyInput("aggregate_runs: no results");
  const std::string& id = results.front().spec_id;
  std::vector<double> ks, re, depth, loss;
  for (const auto& r : results) {
    if (r.spec_id != id)
      throw MixedSpecs("aggregate_runs: results from different specs");
    if (!r.ok) continue;
    ks.push_back(r.final_ks);
    re.push_back(r.final_re);
    depth.push_back(static_cast<double>(r.transpiled_depth));
    loss.push_back(r.generator_loss_curve.empty()
                       ? 0.0
                       : r.generator_loss_curve.back());
  }
  if (ks.empty())
    throw EmptyInput("aggregate_runs: no successful runs for " + id);
  AggregateStats s;
  s.spec_id = id;
  s.n_runs = static_cast<int>(ks.size());
  detail::mean_std(ks, s.mu_ks, s.sigma_ks);
  detail::mean_std(re, s.mu_re, s.sigma_re);
  detail::mean_std(depth, s.mu_depth, s.sigma_depth);
  detail::mean_std(loss, s.mu_loss, s.sigma_loss);
  return s;
}

struct SelectionWeights {
  double w_re = 1.0;
  double w_ks = 1.0;
  double w_depth = 1.0;
  // optional training-loss-stability column (z of sigma_loss), off by default
  double w_loss = 0.0;
};

struct RankedSpec {
  std::string spec_id;
  double composite = 0.0;
};

struct SelectionReport {
  std::vector<RankedSpec> ranking;  // ascending composite, ties resolved
  std::string winner_spec_id;
  SelectionWeights weights;
};

// z-score composite over (mu_re, mu_ks, mu_depth[, sigma_loss]); winner is
// the minimal composite, ties broken by lower mu_depth then spec_id.
inline SelectionReport select_best(const std::vector<AggregateStats>& stats,
                                   SelectionWeights weights = {}) {
  if (stats.empty()) throw EmptyInput("select_best: no aggregate stats");
  const std::size_t n = stats.size();
  auto zscores = [&](auto field) {
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = field(stats[i]);
    double mu, sigma;
    detail::mean_std(col, mu, sigma);
    std::vector<double> z(n, 0.0);
    if (sigma > 0.0)
      for (std::size_t i = 0; i < n; ++i) z[i] = (col[i] - mu) / sigma;
    return z;
  };
  const auto z_re = zscores([](const AggregateStats& s) { return s.mu_re; });
  const auto z_ks = zscores([](const AggregateStats& s) { return s.mu_ks; });
  const auto z_depth =
      zscores([](const AggregateStats& s) { return s.mu_depth; });
  const auto z_loss =
      zscores([](const AggregateStats& s) { return s.sigma_loss; });

  std::vector<std::size_t> order(n);
  std::vector<double> composite(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = i;
    composite[i] = weights.w_re * z_re[i] + weights.w_ks * z_ks[i] +
                   weights.w_depth * z_depth[i] + weights.w_loss * z_loss[i];
  }
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (composite[x] != composite[y]) return composite[x] < composite[y];
    if (stats[x].mu_depth != stats[y].mu_depth)
      return stats[x].mu_depth < stats[y].mu_depth;
    return stats[x].spec_id < stats[y].spec_id;
  });

  SelectionReport report;
  report.weights = weights;
  for (std::size_t i : order)
    report.ranking.push_back({stats[i].spec_id, composite[i]});
  report.winner_spec_id = report.ranking.front().spec_id;
  return report;
}

}  // namespace autoqml
