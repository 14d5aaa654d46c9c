#include "autoqml/metrics.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "autoqml/rng.hpp"

namespace autoqml {
namespace {

// ---------- kl_divergence ----------

TEST(KlDivergence, IdenticalDistributionsGiveExactlyZero) {
  const std::vector<double> p{0.125, 0.5, 0.25, 0.125};
  EXPECT_EQ(kl_divergence(p, p), 0.0);
}

TEST(KlDivergence, TwoBinFixture) {
  EXPECT_NEAR(kl_divergence({0.5, 0.5}, {0.25, 0.75}), 0.14384103622589043,
              1e-15);
}

TEST(KlDivergence, DegenerateP) {
  EXPECT_DOUBLE_EQ(kl_divergence({1.0, 0.0}, {0.5, 0.5}), std::log(2.0));
}

TEST(KlDivergence, ClampKeepsEmptyModelBinsFinite) {
  const double d = kl_divergence({0.5, 0.5}, {1.0, 0.0});
  EXPECT_TRUE(std::isfinite(d));
  EXPECT_GT(d, 10.0);  // 0.5 * ln(0.5 / 1e-12)
}

TEST(KlDivergence, ErrorPaths) {
  EXPECT_THROW(kl_divergence({1.0}, {0.5, 0.5}), LengthMismatch);
  EXPECT_THROW(kl_divergence({0.6, 0.6}, {0.5, 0.5}), NotNormalized);
  EXPECT_THROW(kl_divergence({1.5, -0.5}, {0.5, 0.5}), NotNormalized);
  EXPECT_THROW(kl_divergence({0.5, 0.5}, {0.9, 0.2}), NotNormalized);
}

TEST(KlDivergence, GibbsInequalityOnRandomDistributions) {
  Rng rng(314);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 2 + rng.uniform_int(15);
    std::vector<double> p(dim), q(dim);
    double sp = 0, sq = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      p[i] = rng.uniform() + 1e-3;
      q[i] = rng.uniform() + 1e-3;
      sp += p[i];
      sq += q[i];
    }
    for (std::size_t i = 0; i < dim; ++i) {
      p[i] /= sp;
      q[i] /= sq;
    }
    EXPECT_GE(kl_divergence(p, q), 0.0);
    EXPECT_EQ(kl_divergence(p, p), 0.0);
  }
}

TEST(KlDivergence, NotSymmetric) {
  const std::vector<double> p{0.5, 0.5}, q{0.25, 0.75};
  EXPECT_NE(kl_divergence(p, q), kl_divergence(q, p));
}

// ---------- ks_statistic ----------

TEST(KsStatistic, IdenticalMultisets) {
  EXPECT_DOUBLE_EQ(ks_statistic({3, 1, 2, 2}, {2, 1, 3, 2}), 0.0);
}

TEST(KsStatistic, DisjointSupports) {
  EXPECT_DOUBLE_EQ(ks_statistic({0, 0, 0}, {1, 1, 1}), 1.0);
}

TEST(KsStatistic, FourPointFixture) {
  EXPECT_DOUBLE_EQ(ks_statistic({1, 2, 3, 4}, {1, 2, 3, 10}), 0.25);
}

TEST(KsStatistic, UnevenSampleSizes) {
  EXPECT_DOUBLE_EQ(ks_statistic({1}, {1, 2}), 0.5);
}

TEST(KsStatistic, EmptySampleThrows) {
  EXPECT_THROW(ks_statistic({}, {1.0}), EmptySample);
  EXPECT_THROW(ks_statistic({1.0}, {}), EmptySample);
}

TEST(KsStatistic, InvariantUnderMonotoneTransformAndBounded) {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(40), b(60);
    for (auto& v : a) v = rng.normal();
    for (auto& v : b) v = rng.normal(0.5, 1.3);
    const double d = ks_statistic(a, b);
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
    auto ta = a, tb = b;
    for (auto& v : ta) v = std::exp(v);
    for (auto& v : tb) v = std::exp(v);
    EXPECT_DOUBLE_EQ(ks_statistic(ta, tb), d);
  }
}

// ---------- aggregate_runs ----------

RunResult make_run(const std::string& spec_id, double ks, double re, int depth,
                   bool ok = true, double final_g_loss = 0.7) {
  RunResult r;
  r.spec_id = spec_id;
  r.ok = ok;
  r.final_ks = ks;
  r.final_re = re;
  r.transpiled_depth = depth;
  r.generator_loss_curve = {1.0, final_g_loss};
  return r;
}

TEST(AggregateRuns, SingleRunHasZeroSigmas) {
  const auto s = aggregate_runs({make_run("s", 0.2, 0.4, 42)});
  EXPECT_EQ(s.spec_id, "s");
  EXPECT_EQ(s.n_runs, 1);
  EXPECT_DOUBLE_EQ(s.mu_ks, 0.2);
  EXPECT_DOUBLE_EQ(s.sigma_ks, 0.0);
  EXPECT_DOUBLE_EQ(s.mu_re, 0.4);
  EXPECT_DOUBLE_EQ(s.sigma_re, 0.0);
  EXPECT_DOUBLE_EQ(s.mu_depth, 42.0);
  EXPECT_DOUBLE_EQ(s.sigma_depth, 0.0);
}

TEST(AggregateRuns, TwoPointStatistics) {
  const auto s = aggregate_runs(
      {make_run("s", 0.1, 0.2, 10), make_run("s", 0.3, 0.4, 10)});
  EXPECT_NEAR(s.mu_re, 0.3, 1e-15);
  EXPECT_NEAR(s.sigma_re, 0.1, 1e-15);
  EXPECT_NEAR(s.mu_ks, 0.2, 1e-15);
  EXPECT_NEAR(s.sigma_ks, 0.1, 1e-15);
}

TEST(AggregateRuns, MatchesBruteForceOnTenRuns) {
  Rng rng(5);
  std::vector<RunResult> runs;
  std::vector<double> res;
  for (int i = 0; i < 10; ++i) {
    const double re = rng.uniform(0.1, 1.2);
    res.push_back(re);
    runs.push_back(make_run("s", rng.uniform(), re, 30 + i));
  }
  const auto s = aggregate_runs(runs);
  double mu = 0;
  for (double v : res) mu += v;
  mu /= 10.0;
  double var = 0;
  for (double v : res) var += (v - mu) * (v - mu);
  EXPECT_NEAR(s.mu_re, mu, 1e-12);
  EXPECT_NEAR(s.sigma_re, std::sqrt(var / 10.0), 1e-12);
  EXPECT_EQ(s.n_runs, 10);
}

TEST(AggregateRuns, FailedRunsExcluded) {
  const auto s = aggregate_runs({make_run("s", 0.1, 0.2, 10),
                                 make_run("s", 0.9, 0.9, 10, false),
                                 make_run("s", 0.3, 0.4, 10)});
  EXPECT_EQ(s.n_runs, 2);
  EXPECT_NEAR(s.mu_re, 0.3, 1e-15);
}

TEST(AggregateRuns, TracksFinalGeneratorLoss) {
  const auto s = aggregate_runs({make_run("s", 0.1, 0.2, 10, true, 0.5),
                                 make_run("s", 0.1, 0.2, 10, true, 0.9)});
  EXPECT_NEAR(s.mu_loss, 0.7, 1e-15);
  EXPECT_NEAR(s.sigma_loss, 0.2, 1e-15);
}

TEST(AggregateRuns, ErrorPaths) {
  EXPECT_THROW(aggregate_runs({}), EmptyInput);
  EXPECT_THROW(
      aggregate_runs({make_run("a", 0.1, 0.2, 10), make_run("b", 0.1, 0.2, 10)}),
      MixedSpecs);
  EXPECT_THROW(aggregate_runs({make_run("s", 0.1, 0.2, 10, false)}),
               EmptyInput);
}

// ---------- select_best ----------

AggregateStats stat(const std::string& id, double mu_ks, double mu_re,
                    double mu_depth) {
  AggregateStats s;
  s.spec_id = id;
  s.mu_ks = mu_ks;
  s.mu_re = mu_re;
  s.mu_depth = mu_depth;
  s.n_runs = 10;
  return s;
}

// Reference nine-spec fixture (three initializations x three depths) with
// frozen composite scores from an independent z-score oracle.
std::vector<AggregateStats> nine_spec_fixture() {
  return {
      stat("uniform-k1", 0.1780, 0.5692, 41.18),
      stat("uniform-k2", 0.1104, 0.3562, 77.09),
      stat("uniform-k3", 0.1540, 0.4329, 104.52),
      stat("normal-k1", 0.1570, 0.2793, 203.42),
      stat("normal-k2", 0.1446, 0.2434, 238.38),
      stat("normal-k3", 0.1516, 0.2510, 271.20),
      stat("random-k1", 0.3420, 1.1412, 33.75),
      stat("random-k2", 0.1992, 0.7595, 74.55),
      stat("random-k3", 0.1536, 0.5494, 101.89),
  };
}

TEST(SelectBest, SingleEntryWinsWithScoreZero) {
  const auto r = select_best({stat("only", 0.1, 0.2, 30)});
  EXPECT_EQ(r.winner_spec_id, "only");
  ASSERT_EQ(r.ranking.size(), 1u);
  EXPECT_EQ(r.ranking[0].composite, 0.0);
}

TEST(SelectBest, NineSpecFixtureWinnerAndScores) {
  const auto r = select_best(nine_spec_fixture());
  EXPECT_EQ(r.winner_spec_id, "uniform-k2");
  ASSERT_EQ(r.ranking.size(), 9u);
  const std::vector<std::pair<std::string, double>> expected{
      {"uniform-k2", -2.2199480027070235}, {"uniform-k3", -0.91445494755457879},
      {"uniform-k1", -0.80431170902117566}, {"random-k3", -0.53090033458158026},
      {"normal-k1", -0.22600578695434115}, {"normal-k2", -0.13090131266865734},
      {"normal-k3", 0.40544899053886518},  {"random-k2", 0.62677198751985319},
      {"random-k1", 3.7943011154286359},
  };
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(r.ranking[i].spec_id, expected[i].first);
    EXPECT_NEAR(r.ranking[i].composite, expected[i].second, 1e-12);
  }
  EXPECT_NEAR(r.ranking[1].composite - r.ranking[0].composite,
              1.3054930551524446, 1e-12);
}

TEST(SelectBest, WinnerInvariantUnderAffineRescalingOfOneColumn) {
  auto stats = nine_spec_fixture();
  const auto base = select_best(stats);
  for (auto& s : stats) s.mu_depth = 3.0 * s.mu_depth + 7.0;
  const auto scaled = select_best(stats);
  ASSERT_EQ(base.ranking.size(), scaled.ranking.size());
  for (std::size_t i = 0; i < base.ranking.size(); ++i) {
    EXPECT_EQ(base.ranking[i].spec_id, scaled.ranking[i].spec_id);
    EXPECT_NEAR(base.ranking[i].composite, scaled.ranking[i].composite, 1e-9);
  }
}

TEST(SelectBest, ConstantColumnContributesZero) {
  const auto r = select_best({stat("a", 0.2, 0.5, 50), stat("b", 0.1, 0.4, 50),
                              stat("c", 0.3, 0.6, 50)});
  EXPECT_EQ(r.winner_spec_id, "b");
}

TEST(SelectBest, TieBrokenByDepthThenSpecId) {
  const auto r1 = select_best({stat("x", 0.2, 0.5, 80), stat("y", 0.2, 0.5, 40)});
  EXPECT_EQ(r1.winner_spec_id, "y");
  const auto r2 = select_best({stat("x", 0.2, 0.5, 40), stat("aa", 0.2, 0.5, 40)});
  EXPECT_EQ(r2.winner_spec_id, "aa");
}

TEST(SelectBest, OptionalLossStabilityColumn) {
  auto a = stat("steady", 0.2, 0.5, 40);
  a.sigma_loss = 0.01;
  auto b = stat("jittery", 0.2, 0.5, 40);
  b.sigma_loss = 0.8;
  // default weights ignore the loss column; lexicographic tie-break
  EXPECT_EQ(select_best({a, b}).winner_spec_id, "jittery");
  SelectionWeights w;
  w.w_loss = 1.0;
  EXPECT_EQ(select_best({a, b}, w).winner_spec_id, "steady");
}

TEST(SelectBest, EmptyInputThrows) {
  EXPECT_THROW(select_best({}), EmptyInput);
}

}  // namespace
}  // namespace autoqml
