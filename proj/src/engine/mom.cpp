#include "mom/engine/mom.hpp"

#include <iostream>
#include <memory>
#include <mutex>

#include "mom/numeric/geometric.hpp"

namespace mom::engine {

using numeric::BigInt;
using numeric::RatFun;
using numeric::RationalRing;

Scalar mom_dp(int k, long n, const AnyRing& ring) {
  return std::visit([&](const auto& r) -> Scalar { return mom_dp(r, k, n); }, ring);
}

Scalar mom_dp(int k, long n, const BetaSq& beta_sq, RingKind kind, mpfr_prec_t precision) {
  return mom_dp(k, n, numeric::make_ring(beta_sq, kind, precision));
}

namespace {

GenPoly next_symbolic(const std::vector<GenPoly>& lower, long j) {
  GenPoly s;
  for (long i = 1; 2 * i <= j; ++i) {
    BigRat weight(numeric::binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i)));
    if (2 * i != j) weight *= 2;
    GenPoly prod = lower[static_cast<std::size_t>(i)] * lower[static_cast<std::size_t>(j - i)];
    prod *= RatFun::t_power(2 * i * (i - j)) * RatFun(weight);
    s += prod;
  }

  // G_j(n) = c sum_{lambda<n} 2^{D lambda} S(n-1-lambda) + 2^{D n}; each term
  // s_E 2^{E e} of S contributes c s_E 2^{-E} (2^{Dn} - 2^{En}) / (2^{D-E} - 1).
  const ExpPair diag{j * j, 1 - j};
  const RatFun c = RatFun::t_power(j * j, -j);
  GenPoly out = GenPoly::term(diag, RatFun(1L));
  for (const auto& [e, coeff] : s.terms()) {
    const ExpPair gap = diag - e;
    if (gap.is_zero()) throw DegenerateExponent("inner exponent coincides with the diagonal");
    const RatFun factor = c * coeff * RatFun::t_power(-e.p, -e.q) / (RatFun::t_power(gap.p, gap.q) - RatFun(1L));
    out.add_term(diag, factor);
    out.add_term(e, -factor);
  }
  return out;
}

struct SymbolicCache {
  std::mutex mutex;
  std::vector<std::unique_ptr<GenPoly>> entries;
};

SymbolicCache& symbolic_cache() {
  static SymbolicCache cache;
  return cache;
}

}  // namespace

const GenPoly& mom_symbolic(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  auto& cache = symbolic_cache();
  std::lock_guard lock(cache.mutex);
  auto& entries = cache.entries;
  if (entries.empty()) {
    entries.push_back(std::make_unique<GenPoly>());
    entries.push_back(std::make_unique<GenPoly>(GenPoly::term(ExpPair{1, 0}, RatFun(1L))));
  }
  while (static_cast<int>(entries.size()) <= k) {
    std::vector<GenPoly> lower;
    lower.reserve(entries.size());
    for (const auto& e : entries) lower.push_back(*e);
    entries.push_back(std::make_unique<GenPoly>(next_symbolic(lower, static_cast<long>(entries.size()))));
  }
  return *entries[static_cast<std::size_t>(k)];
}

Scalar evaluate_genpoly(const GenPoly& g, const AnyRing& ring, long n) {
  return std::visit([&](const auto& r) -> Scalar { return evaluate_genpoly(r, g, n); }, ring);
}

BigRat MomPolynomial::evaluate(const BigRat& x) const {
  BigRat acc(0);
  long current = degree();
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    while (current > it->first) {
      acc *= x;
      --current;
    }
    acc += it->second;
  }
  for (; current > 0; --current) acc *= x;
  return acc;
}

MomPolynomial interpolate_mom_polynomial(int k, long beta) {
  if (k < 1 || beta < 1) throw std::invalid_argument("k and beta must be positive integers");
  const long b2 = beta * beta;
  const long deg = k * k * b2 - k + 1;
  const auto count = static_cast<std::size_t>(deg + 1);

  MomentTable<RationalRing> table(RationalRing(b2), k);
  std::vector<BigRat> xs(count), dd(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = numeric::pow2_rat(static_cast<long>(i));
    dd[i] = table.at(k, static_cast<long>(i));
  }
  // Divided differences in place, then expand the Newton form.
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  std::vector<BigRat> poly(1, dd[count - 1]);
  for (std::size_t i = count - 1; i-- > 0;) {
    // poly = poly * (X - xs[i]) + dd[i]
    std::vector<BigRat> next(poly.size() + 1);
    for (std::size_t p = 0; p < poly.size(); ++p) {
      next[p + 1] += poly[p];
      next[p] -= poly[p] * xs[i];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }

  MomPolynomial out;
  out.k = k;
  out.beta = beta;
  for (std::size_t p = 0; p < poly.size(); ++p) {
    if (poly[p] != 0) out.coefficients[static_cast<long>(p)] = poly[p];
  }
  return out;
}

MomPolynomial mom_polynomial(int k, long beta) {
  if (k < 1 || beta < 1) throw std::invalid_argument("k and beta must be positive integers");
  const long b2 = beta * beta;
  const RationalRing ring(b2);
  const BigRat t = ring.t();
  const auto lift = [](const BigRat& c) { return c; };

  MomPolynomial out;
  out.k = k;
  out.beta = beta;
  for (const auto& [e, c] : mom_symbolic(k).terms()) {
    auto [num, den] = c.evaluate_parts(t, BigRat(0), lift);
    const long degree = e.p * b2 + e.q;
    if (den == 0 || degree < 0) {
      std::clog << "mom_polynomial: resonant denominator at k=" << k << " beta=" << beta
                << " exponent " << e.to_string() << "; interpolating\n";
      MomPolynomial fallback = interpolate_mom_polynomial(k, beta);
      fallback.used_fallback = true;
      return fallback;
    }
    BigRat& slot = out.coefficients[degree];
    slot += num / den;
    if (slot == 0) out.coefficients.erase(degree);
  }
  return out;
}

}  // namespace mom::engine
