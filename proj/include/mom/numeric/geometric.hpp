#pragma once

#include <stdexcept>

#include "mom/errors.hpp"
#include "mom/numeric/genpoly.hpp"
#include "mom/numeric/ring.hpp"

namespace mom::numeric {

// Closed form of sum_{lambda=0}^{n-1} 2^{a lambda} as a GenPoly in n:
// (2^{an} - 1) / (2^a - 1). Throws DegenerateExponent for a = (0,0), where
// the sum is just n.
GenPoly geometric_sum(ExpPair a);

namespace detail {

// True when x = 2^a is 1, or close enough in the float ring that the closed
// forms would lose a noticeable share of the working precision.
template <class Ring>
bool base_is_one(const Ring& ring, ExpPair a, const typename Ring::value_type& x) {
  if (a.is_zero()) return true;
  const typename Ring::value_type diff = x - ring.one();
  if constexpr (Ring::exact) {
    return ring.is_zero(diff);
  } else {
    return abs(diff) < exp2(BigFloat(-static_cast<long>(ring.precision() / 4), ring.precision()));
  }
}

template <class Ring>
typename Ring::value_type direct_weighted_sum(const Ring& ring, ExpPair a, int s, long n) {
  auto sum = ring.zero();
  for (long lambda = 0; lambda < n; ++lambda) {
    long w = 1;
    for (int i = 0; i < s; ++i) w *= (n - lambda - 1);
    if (w == 0) continue;
    sum = sum + ring.lift(BigRat(w)) * ring.pow2(lambda * a);
  }
  return sum;
}

}  // namespace detail

// sum_{lambda=0}^{n-1} (n - lambda - 1)^s 2^{a lambda} in the ring, s in {0,1,2}.
template <class Ring>
typename Ring::value_type weighted_geometric_sum(const Ring& ring, ExpPair a, int s, long n) {
  if (s < 0 || s > 2) throw std::invalid_argument("weighted_geometric_sum supports s in {0,1,2}");
  if (n < 0) throw std::invalid_argument("weighted_geometric_sum needs n >= 0");
  if (n == 0) return ring.zero();

  const typename Ring::value_type x = ring.pow2(a);
  if (detail::base_is_one(ring, a, x)) {
    if constexpr (Ring::exact) {
      // sum_{j=0}^{n-1} j^s
      const BigInt nn(n);
      BigInt v;
      if (s == 0) v = nn;
      else if (s == 1) v = nn * (nn - 1) / 2;
      else v = (nn - 1) * nn * (2 * nn - 1) / 6;
      return ring.lift(BigRat(v));
    } else {
      return detail::direct_weighted_sum(ring, a, s, n);
    }
  }

  // Spelled-out types: with gmpxx, auto would capture lazy expressions.
  using V = typename Ring::value_type;
  const V one = ring.one();
  const V xn = ring.pow2(n * a);
  const V d = x - one;
  const V nv = ring.lift(BigRat(n));
  if (s == 0) return (xn - one) / d;
  if (s == 1) return (xn - nv * x + nv - one) / (d * d);
  // [x^{n+1} + x^n - n^2 x^2 + (2n^2 - 2n - 1) x - (n-1)^2] / (x-1)^3
  const BigRat nr(n);
  const V n2 = ring.lift(nr * nr);
  const V lin = ring.lift(BigRat(2 * nr * nr - 2 * nr - 1));
  const V c0 = ring.lift(BigRat((nr - 1) * (nr - 1)));
  const V numer = xn * x + xn - n2 * x * x + lin * x - c0;
  return numer / (d * d * d);
}

// Value of sum_{lambda=0}^{n-1} 2^{a lambda}; n itself when 2^a = 1.
template <class Ring>
typename Ring::value_type geometric_sum(const Ring& ring, ExpPair a, long n) {
  return weighted_geometric_sum(ring, a, 0, n);
}

}  // namespace mom::numeric
