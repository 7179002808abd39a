#pragma once

#include <cstdint>
#include <vector>

#include "mom/numeric/bigfloat.hpp"

namespace mom::montecarlo {

struct SimConfig {
  long n = 0;
  double beta = 0.0;
  long trials = 1;
  std::uint64_t seed = 0;
  // Kept for provenance; sampling itself runs in binary64.
  mpfr_prec_t precision = numeric::kDefaultPrecision;
  unsigned threads = 0;  // 0 = hardware concurrency
  // Warn when k^2 beta^2 exceeds this.
  double heavy_tail_threshold = 1.0;
};

struct MomentEstimate {
  int k = 0;
  double mean = 0.0;
  double std_error = 0.0;
  long trials = 0;
  std::uint64_t seed = 0;
  bool heavy_tail_warning = false;
};

// Standard deviation of one edge increment: sqrt(log(2) / 2).
double edge_sigma();

// Uniform in (0,1) from the generator keyed by (seed, trial, edge).
double edge_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t edge);

// Gaussian increment of edge `edge` in trial `trial`. Edges are numbered in
// level order: the two edges below the root are 0 and 1, the four below them
// 2..5, and so on, 2^{n+1} - 2 in total.
double edge_increment(std::uint64_t seed, std::uint64_t trial, std::uint64_t edge);

// Leaf path sums X_n(l), l = 0 .. 2^n - 1, for one trial.
std::vector<double> leaf_sums(const SimConfig& config, long trial_index);

// Z_n = 2^{-n} sum_l exp(2 beta X_n(l)), combined with a max shift so that
// large exponents do not overflow early.
double sample_partition_function(const SimConfig& config, long trial_index);

MomentEstimate estimate_mom(const SimConfig& config, int k);

// Fixed-order pairwise summation.
double pairwise_sum(const double* data, std::size_t count);

}  // namespace mom::montecarlo
