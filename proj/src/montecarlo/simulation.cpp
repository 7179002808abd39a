#include "mom/montecarlo/simulation.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "mom/montecarlo/philox.hpp"

namespace mom::montecarlo {

double edge_sigma() { return std::sqrt(0.5 * std::log(2.0)); }

double edge_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t edge) {
  const Philox4x32::Block counter{static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                                  static_cast<std::uint32_t>(edge), static_cast<std::uint32_t>(edge >> 32)};
  const Philox4x32::Key key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  const auto out = Philox4x32::generate(counter, key);
  // 53 random bits, centred in their cell so 0 and 1 never occur.
  const std::uint64_t bits = (std::uint64_t{out[0] >> 5} << 26) | (out[1] >> 6);
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double edge_increment(std::uint64_t seed, std::uint64_t trial, std::uint64_t edge) {
  static const boost::math::normal_distribution<double> normal(0.0, edge_sigma());
  return boost::math::quantile(normal, edge_uniform(seed, trial, edge));
}

std::vector<double> leaf_sums(const SimConfig& config, long trial_index) {
  if (config.n < 0 || config.n > 40) throw std::invalid_argument("depth out of range");
  std::vector<double> level{0.0};
  std::uint64_t edge = 0;
  for (long m = 1; m <= config.n; ++m) {
    std::vector<double> next(level.size() * 2);
    for (std::size_t v = 0; v < level.size(); ++v) {
      next[2 * v] = level[v] + edge_increment(config.seed, static_cast<std::uint64_t>(trial_index), edge++);
      next[2 * v + 1] = level[v] + edge_increment(config.seed, static_cast<std::uint64_t>(trial_index), edge++);
    }
    level = std::move(next);
  }
  return level;
}

double sample_partition_function(const SimConfig& config, long trial_index) {
  if (trial_index < 0 || trial_index >= config.trials) throw std::out_of_range("trial index outside config");
  const std::vector<double> x = leaf_sums(config, trial_index);
  std::vector<double> e(x.size());
  for (std::size_t l = 0; l < x.size(); ++l) e[l] = 2.0 * config.beta * x[l];
  const double shift = *std::max_element(e.begin(), e.end());
  for (auto& v : e) v = std::exp(v - shift);
  const double sum = pairwise_sum(e.data(), e.size());
  return std::exp(shift) * std::ldexp(sum, -static_cast<int>(config.n));
}

double pairwise_sum(const double* data, std::size_t count) {
  if (count <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) s += data[i];
    return s;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

MomentEstimate estimate_mom(const SimConfig& config, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (config.trials < 1) throw std::invalid_argument("trials must be positive");
  if (config.n < 0 || config.n > 40) throw std::invalid_argument("depth out of range");

  const auto trials = static_cast<std::size_t>(config.trials);
  std::vector<double> values(trials);
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < trials; i += threads) {
        values[i] = std::pow(sample_partition_function(config, static_cast<long>(i)), k);
      }
    });
  }
  for (auto& th : pool) th.join();

  MomentEstimate out;
  out.k = k;
  out.trials = config.trials;
  out.seed = config.seed;
  out.mean = pairwise_sum(values.data(), trials) / static_cast<double>(trials);
  if (trials > 1) {
    std::vector<double> sq(trials);
    for (std::size_t i = 0; i < trials; ++i) sq[i] = (values[i] - out.mean) * (values[i] - out.mean);
    const double var = pairwise_sum(sq.data(), trials) / static_cast<double>(trials - 1);
    out.std_error = std::sqrt(var / static_cast<double>(trials));
  }
  out.heavy_tail_warning = static_cast<double>(k) * k * config.beta * config.beta > config.heavy_tail_threshold;
  return out;
}

}  // namespace mom::montecarlo
