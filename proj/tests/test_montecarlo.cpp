#include <gtest/gtest.h>

#include <cmath>
#include <cstring>

#include "mom/engine/mom.hpp"
#include "mom/montecarlo/philox.hpp"
#include "mom/montecarlo/simulation.hpp"

using namespace mom;
using namespace mom::montecarlo;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

double exact_mom(int k, long n, const char* beta_sq) {
  const numeric::BetaSq b(numeric::BigFloat::parse(beta_sq));
  return numeric::scalar_to_float(engine::mom_dp(k, n, b)).to_double();
}

}  // namespace

TEST(Philox, KnownAnswers) {
  using B = Philox4x32::Block;
  EXPECT_EQ(Philox4x32::generate(B{0, 0, 0, 0}, {0, 0}), (B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32::generate(B{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32::generate(B{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Sampler, UniformsAreInsideTheOpenInterval) {
  for (std::uint64_t e = 0; e < 20000; ++e) {
    const double u = edge_uniform(7, e % 13, e);
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Sampler, IncrementMoments) {
  const std::size_t count = 200000;
  std::vector<double> x(count), x2(count);
  for (std::size_t i = 0; i < count; ++i) {
    x[i] = edge_increment(11, i / 64, i % 64);
    x2[i] = x[i] * x[i];
  }
  const double mean = pairwise_sum(x.data(), count) / count;
  const double var = pairwise_sum(x2.data(), count) / count - mean * mean;
  EXPECT_DOUBLE_EQ(edge_sigma(), std::sqrt(std::log(2.0) / 2.0));
  EXPECT_LT(std::abs(mean), 5 * edge_sigma() / std::sqrt(double(count)));
  EXPECT_NEAR(var, std::log(2.0) / 2.0, 0.01);
}

TEST(Sampler, TrivialCases) {
  SimConfig c;
  c.beta = 0.8;
  c.seed = 3;
  c.trials = 10;
  for (long t = 0; t < 10; ++t) EXPECT_EQ(sample_partition_function(c, t), 1.0);
  c.n = 7;
  c.beta = 0.0;
  for (long t = 0; t < 10; ++t) EXPECT_EQ(sample_partition_function(c, t), 1.0);
  const MomentEstimate e = estimate_mom(c, 2);
  EXPECT_EQ(e.mean, 1.0);
  EXPECT_EQ(e.std_error, 0.0);
  EXPECT_EQ(e.trials, 10);
}

TEST(Sampler, StraightLineDepthTwo) {
  SimConfig c;
  c.n = 2;
  c.beta = 0.7;
  c.seed = 2024;
  c.trials = 5;
  for (long t = 0; t < 5; ++t) {
    double y[6];
    for (int e = 0; e < 6; ++e) y[e] = edge_increment(c.seed, t, e);
    const double b2 = 2 * c.beta;
    const double z = (std::exp(b2 * (y[0] + y[2])) + std::exp(b2 * (y[0] + y[3])) + std::exp(b2 * (y[1] + y[4])) +
                      std::exp(b2 * (y[1] + y[5]))) /
                     4;
    EXPECT_NEAR(sample_partition_function(c, t), z, 1e-14 * z);
    const auto leaves = leaf_sums(c, t);
    ASSERT_EQ(leaves.size(), 4u);
    EXPECT_EQ(leaves[3], y[1] + y[5]);
  }
}

TEST(Sampler, LargeExponentsStayFinite) {
  SimConfig c;
  c.n = 16;
  c.beta = 60.0;
  c.seed = 5;
  c.trials = 3;
  for (long t = 0; t < 3; ++t) EXPECT_FALSE(std::isnan(sample_partition_function(c, t)));
}

TEST(Estimate, DeterministicAcrossThreadCounts) {
  SimConfig c;
  c.n = 5;
  c.beta = 0.4;
  c.trials = 3001;
  c.seed = 99;
  c.threads = 1;
  const MomentEstimate a = estimate_mom(c, 2);
  c.threads = 6;
  const MomentEstimate b = estimate_mom(c, 2);
  const MomentEstimate again = estimate_mom(c, 2);
  EXPECT_TRUE(bit_equal(a.mean, b.mean));
  EXPECT_TRUE(bit_equal(a.std_error, b.std_error));
  EXPECT_TRUE(bit_equal(b.mean, again.mean));
  c.seed = 100;
  EXPECT_FALSE(bit_equal(estimate_mom(c, 2).mean, a.mean));
}

TEST(Estimate, HeavyTailFlag) {
  SimConfig c;
  c.n = 2;
  c.trials = 10;
  c.beta = 0.3;
  EXPECT_FALSE(estimate_mom(c, 2).heavy_tail_warning);
  c.beta = 0.6;
  EXPECT_TRUE(estimate_mom(c, 2).heavy_tail_warning);
  c.heavy_tail_threshold = 2.0;
  EXPECT_FALSE(estimate_mom(c, 2).heavy_tail_warning);
}

TEST(Estimate, Preconditions) {
  SimConfig c;
  c.trials = 0;
  EXPECT_THROW(estimate_mom(c, 1), std::invalid_argument);
  c.trials = 1;
  EXPECT_THROW(estimate_mom(c, 0), std::invalid_argument);
  c.n = -1;
  EXPECT_THROW(estimate_mom(c, 1), std::invalid_argument);
}

TEST(Estimate, AgreesWithExactMoments) {
  SimConfig c;
  c.n = 6;
  c.beta = 0.3;
  c.trials = 100000;
  c.seed = 42;
  const MomentEstimate e1 = estimate_mom(c, 1);
  EXPECT_LE(std::abs(e1.mean - std::exp2(0.09 * 6)) / e1.std_error, 3.0);
  const MomentEstimate e2 = estimate_mom(c, 2);
  EXPECT_LE(std::abs(e2.mean - exact_mom(2, 6, "0.09")) / e2.std_error, 3.0);
}

TEST(PairwiseSum, Basics) {
  std::vector<double> ones(1001, 1.0);
  EXPECT_EQ(pairwise_sum(ones.data(), ones.size()), 1001.0);
  EXPECT_EQ(pairwise_sum(ones.data(), 0), 0.0);
}
