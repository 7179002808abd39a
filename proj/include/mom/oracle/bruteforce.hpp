#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mom/errors.hpp"
#include "mom/numeric/ring.hpp"

namespace mom::oracle {

using numeric::AnyRing;
using numeric::BetaSq;
using numeric::ExpPair;
using numeric::RingKind;
using numeric::Scalar;

// Leaf of the depth-n binary tree; bit n-1 of the label is the first step
// below the root.
struct Leaf {
  std::uint64_t label = 0;
  int depth = 0;
};

// Length of the common root-to-leaf prefix.
int lcl(const Leaf& a, const Leaf& b);
int lcl_multi(const std::vector<Leaf>& leaves);

inline constexpr int kDefaultBudget = 16;
// Never enumerate more than 2^kHardBudget tuples, whatever the caller asks.
inline constexpr int kHardBudget = 30;

struct BruteforceOptions {
  int budget = kDefaultBudget;  // max k*n
  unsigned threads = 0;         // 0 = hardware concurrency
};

// Number of k-tuples of depth-n leaves with k n + sum_{i != j} lcl(l_i, l_j) = L,
// keyed by L.
std::map<long, std::uint64_t> exponent_histogram(int k, int n, const BruteforceOptions& options = {});

// 2^{-kn} sum over all 2^{kn} tuples of 2^{beta^2 (k n + sum_{i != j} lcl)}.
template <class Ring>
typename Ring::value_type mom_bruteforce(const Ring& ring, int k, int n, const BruteforceOptions& options = {}) {
  auto sum = ring.zero();
  const long kn = static_cast<long>(k) * n;
  for (const auto& [exponent, count] : exponent_histogram(k, n, options)) {
    sum = sum + ring.lift(numeric::BigRat(numeric::BigInt(std::to_string(count)))) * ring.pow2(ExpPair{exponent, -kn});
  }
  return sum;
}

Scalar mom_bruteforce(int k, int n, const AnyRing& ring, const BruteforceOptions& options = {});
Scalar mom_bruteforce(int k, int n, const BetaSq& beta_sq, RingKind kind = RingKind::Auto,
                      mpfr_prec_t precision = numeric::kDefaultPrecision, const BruteforceOptions& options = {});

// Same quantity enumerated with the tuple slots in reverse order and each
// tuple's weight accumulated directly, without the exponent histogram.
Scalar mom_bruteforce_permuted(int k, int n, const AnyRing& ring, const BruteforceOptions& options = {});

}  // namespace mom::oracle
