#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "mom/errors.hpp"
#include "mom/numeric/genpoly.hpp"
#include "mom/numeric/ring.hpp"

namespace mom::engine {

using numeric::AnyRing;
using numeric::BetaSq;
using numeric::BigRat;
using numeric::ExpPair;
using numeric::GenPoly;
using numeric::RingKind;
using numeric::Scalar;

// MoM_d(j) for 1 <= j <= k_max and every depth d built so far.
//
// Row j at depth d+1 follows from the rows i < j at depth d:
//   M[j][d+1] = 2^{j^2 b - j} S_j[d] + 2^{j^2 b - j + 1} M[j][d],
//   S_j[d]    = sum_{i=1}^{j-1} C(j,i) 2^{2 i b (i-j)} M[i][d] M[j-i][d],
// which is the lambda-sum over the first split level unrolled one level at a
// time. No division occurs, so critical beta needs no special handling.
template <class Ring>
class MomentTable {
 public:
  using value_type = typename Ring::value_type;

  MomentTable(Ring ring, int k_max) : ring_(std::move(ring)), k_max_(k_max) {
    if (k_max < 1) throw std::invalid_argument("k must be positive");
    const long K = k_max;
    rows_.resize(static_cast<std::size_t>(K + 1));
    scale_.reserve(static_cast<std::size_t>(K + 1));
    diag_.reserve(static_cast<std::size_t>(K + 1));
    weights_.resize(static_cast<std::size_t>(K + 1));
    for (long j = 0; j <= K; ++j) {
      scale_.push_back(ring_.pow2(ExpPair{j * j, -j}));
      diag_.push_back(ring_.pow2(ExpPair{j * j, 1 - j}));
      for (long i = 1; i < j; ++i) {
        const BigRat binom(numeric::binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i)));
        weights_[static_cast<std::size_t>(j)].push_back(ring_.lift(binom) * ring_.pow2(ExpPair{2 * i * (i - j), 0}));
      }
    }
    for (long j = 1; j <= K; ++j) rows_[static_cast<std::size_t>(j)].push_back(ring_.one());
  }

  const Ring& ring() const { return ring_; }
  int k_max() const { return k_max_; }
  long n_max() const { return static_cast<long>(rows_[1].size()) - 1; }

  void extend(long n_max) {
    for (long d = this->n_max(); d < n_max; ++d) {
      const auto depth = static_cast<std::size_t>(d);
      rows_[1].push_back(ring_.pow2(ExpPair{d + 1, 0}));
      for (std::size_t j = 2; j <= static_cast<std::size_t>(k_max_); ++j) {
        auto s = ring_.zero();
        for (std::size_t i = 1; i < j; ++i) {
          s = s + weights_[j][i - 1] * rows_[i][depth] * rows_[j - i][depth];
        }
        rows_[j].push_back(scale_[j] * s + diag_[j] * rows_[j][depth]);
      }
    }
  }

  const value_type& at(int j, long depth) {
    if (j < 1 || j > k_max_) throw std::out_of_range("moment index outside table");
    if (depth < 0) throw std::out_of_range("negative depth");
    extend(depth);
    return rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(depth)];
  }

 private:
  Ring ring_;
  int k_max_;
  std::vector<std::vector<value_type>> rows_;
  std::vector<value_type> scale_;
  std::vector<value_type> diag_;
  std::vector<std::vector<value_type>> weights_;
};

template <class Ring>
typename Ring::value_type mom_dp(const Ring& ring, int k, long n) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  MomentTable<Ring> table(ring, k);
  return table.at(k, n);
}

// Ring chosen by make_ring(beta_sq, kind, precision).
Scalar mom_dp(int k, long n, const BetaSq& beta_sq, RingKind kind = RingKind::Auto,
              mpfr_prec_t precision = numeric::kDefaultPrecision);
Scalar mom_dp(int k, long n, const AnyRing& ring);

// Closed form of MoM_n(k, beta) over Q(t), t = 2^{beta^2}, valid wherever no
// coefficient denominator vanishes. Memoized; safe to call concurrently.
const GenPoly& mom_symbolic(int k);

// Throws PoleAtCriticalBeta when a coefficient denominator vanishes at t.
template <class Ring>
typename Ring::value_type evaluate_genpoly(const Ring& ring, const GenPoly& g, long n) {
  const auto t = ring.t();
  const auto zero = ring.zero();
  const auto lift = [&ring](const BigRat& c) { return ring.lift(c); };
  auto sum = ring.zero();
  for (const auto& [e, c] : g.terms()) {
    auto [num, den] = c.evaluate_parts(t, zero, lift);
    if (ring.is_pole(den)) {
      throw PoleAtCriticalBeta("coefficient of 2^" + e.to_string() + "n has a pole at this beta");
    }
    sum = sum + num / den * ring.pow2(n * e);
  }
  return sum;
}

Scalar evaluate_genpoly(const GenPoly& g, const AnyRing& ring, long n);

// MoM_n(k, beta) for integer beta as an exact polynomial in X = 2^n.
struct MomPolynomial {
  int k = 0;
  long beta = 0;
  std::map<long, BigRat> coefficients;  // degree -> coefficient, zeros omitted
  // Set when some closed-form denominator vanished at t = 2^{beta^2} and the
  // coefficients came from exact interpolation instead.
  bool used_fallback = false;

  long degree() const { return coefficients.empty() ? -1 : coefficients.rbegin()->first; }
  BigRat leading() const { return coefficients.empty() ? BigRat(0) : coefficients.rbegin()->second; }
  BigRat evaluate(const BigRat& x) const;
  BigRat evaluate_at_depth(long n) const { return evaluate(numeric::pow2_rat(n)); }
};

MomPolynomial mom_polynomial(int k, long beta);

// Same polynomial by Newton interpolation of mom_dp at X = 2^0 .. 2^{deg}.
MomPolynomial interpolate_mom_polynomial(int k, long beta);

}  // namespace mom::engine
