#include "mom/oracle/bruteforce.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

namespace mom::oracle {

int lcl(const Leaf& a, const Leaf& b) {
  if (a.depth != b.depth) throw DomainError("lcl of leaves at different depths");
  if (a.depth < 0 || a.depth > 63) throw DomainError("leaf depth out of range");
  const std::uint64_t limit = std::uint64_t{1} << a.depth;
  if (a.label >= limit || b.label >= limit) throw DomainError("leaf label outside [0, 2^n)");
  return a.depth - std::bit_width(a.label ^ b.label);
}

int lcl_multi(const std::vector<Leaf>& leaves) {
  if (leaves.empty()) throw std::invalid_argument("lcl_multi of an empty list");
  int out = leaves.front().depth;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) out = std::min(out, lcl(leaves[i], leaves[j]));
  }
  if (leaves.size() == 1) out = lcl(leaves[0], leaves[0]);
  return out;
}

namespace {

void check_budget(int k, int n, const BruteforceOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const long kn = static_cast<long>(k) * n;
  if (kn > options.budget || kn > kHardBudget) {
    throw BudgetExceeded("k*n = " + std::to_string(kn) + " exceeds the enumeration budget " +
                         std::to_string(std::min(options.budget, kHardBudget)));
  }
}

unsigned thread_count(const BruteforceOptions& options, std::uint64_t work) {
  unsigned t = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  if (work < (std::uint64_t{1} << 12)) t = 1;
  return t;
}

// Pairwise lcl sum over ordered pairs i != j for the tuple packed in `packed`.
long pair_sum(std::uint64_t packed, int k, int n) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  long total = 0;
  for (int i = 0; i < k; ++i) {
    const std::uint64_t a = (packed >> (i * n)) & mask;
    for (int j = i + 1; j < k; ++j) {
      const std::uint64_t b = (packed >> (j * n)) & mask;
      total += 2 * (n - std::bit_width(a ^ b));
    }
  }
  return total;
}

}  // namespace

std::map<long, std::uint64_t> exponent_histogram(int k, int n, const BruteforceOptions& options) {
  check_budget(k, n, options);
  const long kn = static_cast<long>(k) * n;
  const std::uint64_t total = std::uint64_t{1} << kn;
  // Pair sums range over 0 .. k(k-1) n.
  const std::size_t bins = static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1) * n + 1;

  const unsigned threads = thread_count(options, total);
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(bins));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t lo = total / threads * w;
      const std::uint64_t hi = (w + 1 == threads) ? total : total / threads * (w + 1);
      auto& counts = partial[w];
      for (std::uint64_t x = lo; x < hi; ++x) ++counts[static_cast<std::size_t>(pair_sum(x, k, n))];
    });
  }
  for (auto& th : pool) th.join();

  std::map<long, std::uint64_t> out;
  for (std::size_t b = 0; b < bins; ++b) {
    std::uint64_t c = 0;
    for (const auto& counts : partial) c += counts[b];
    if (c) out[kn + static_cast<long>(b)] = c;
  }
  return out;
}

Scalar mom_bruteforce(int k, int n, const AnyRing& ring, const BruteforceOptions& options) {
  return std::visit([&](const auto& r) -> Scalar { return mom_bruteforce(r, k, n, options); }, ring);
}

Scalar mom_bruteforce(int k, int n, const BetaSq& beta_sq, RingKind kind, mpfr_prec_t precision,
                      const BruteforceOptions& options) {
  return mom_bruteforce(k, n, numeric::make_ring(beta_sq, kind, precision), options);
}

Scalar mom_bruteforce_permuted(int k, int n, const AnyRing& ring, const BruteforceOptions& options) {
  check_budget(k, n, options);
  return std::visit(
      [&](const auto& r) -> Scalar {
        const long kn = static_cast<long>(k) * n;
        const std::uint64_t total = std::uint64_t{1} << kn;
        const std::uint64_t mask = n ? (std::uint64_t{1} << n) - 1 : 0;
        auto sum = r.zero();
        std::vector<Leaf> leaves(static_cast<std::size_t>(k));
        for (std::uint64_t x = total; x-- > 0;) {
          // Slot i reads the block that the histogram enumeration assigns to
          // slot k-1-i.
          for (int i = 0; i < k; ++i) leaves[static_cast<std::size_t>(i)] = Leaf{(x >> ((k - 1 - i) * n)) & mask, n};
          long exponent = kn;
          for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
              if (i != j) exponent += lcl(leaves[static_cast<std::size_t>(i)], leaves[static_cast<std::size_t>(j)]);
            }
          }
          sum = sum + r.pow2(ExpPair{exponent, -kn});
        }
        return sum;
      },
      ring);
}

}  // namespace mom::oracle
