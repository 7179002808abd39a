#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mom/asymptotics/regime.hpp"
#include "mom/engine/mom.hpp"
#include "mom/errors.hpp"

namespace mom::asymptotics {

using numeric::AnyRing;
using numeric::BigFloat;
using numeric::BigRat;
using numeric::RingKind;
using numeric::Scalar;

// rho(1..k) at the ring's beta^2:
//   pi(j)  = 2^{j^2 b - j} sum_i C(j,i) 2^{2 i b (i-j)} rho(i) rho(j-i)
//   rho(j) = pi(j) / (2^{j b} - 2^{j^2 b - j + 1}).
// Index 0 is unused. No regime check; a vanishing denominator raises
// PoleAtCriticalBeta.
template <class Ring>
std::vector<typename Ring::value_type> rho_table(const Ring& ring, int k) {
  std::vector<typename Ring::value_type> rho;
  rho.reserve(static_cast<std::size_t>(k + 1));
  rho.push_back(ring.zero());
  rho.push_back(ring.one());
  for (long j = 2; j <= k; ++j) {
    auto pi = ring.zero();
    for (long i = 1; i < j; ++i) {
      const BigRat binom(numeric::binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i)));
      pi = pi + ring.lift(binom) * ring.pow2(ExpPair{2 * i * (i - j), 0}) * rho[static_cast<std::size_t>(i)] *
                    rho[static_cast<std::size_t>(j - i)];
    }
    pi = pi * ring.pow2(ExpPair{j * j, -j});
    const typename Ring::value_type den = ring.pow2(ExpPair{j, 0}) - ring.pow2(ExpPair{j * j, 1 - j});
    if (ring.is_pole(den)) throw PoleAtCriticalBeta("rho denominator vanishes at j=" + std::to_string(j));
    rho.push_back(pi / den);
  }
  return rho;
}

// Throws RegimeViolation unless k beta^2 < 1.
template <class Ring>
typename Ring::value_type rho(const Ring& ring, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (classify_regime(k, ring.beta_sq_value()).tag != RegimeTag::SubCritical) {
    throw RegimeViolation("rho needs k beta^2 < 1");
  }
  return rho_table(ring, k)[static_cast<std::size_t>(k)];
}

Scalar rho(int k, const BetaSq& beta_sq, RingKind kind = RingKind::Auto,
           mpfr_prec_t precision = numeric::kDefaultPrecision);

// sigma(k) = 1/2 sum_j C(k,j) 2^{(2j/k)(j-k)} rho(j) rho(k-j) with rho taken at
// beta^2 = 1/k; exact in Q(2^{1/k}). sigma(1) = 1.
numeric::Radical sigma(int k);

// Coefficient of 2^{(k^2 b - k + 1) n} in the closed form, at the ring's
// beta^2. Throws RegimeViolation unless k beta^2 > 1 and PoleAtCriticalBeta
// if its reduced denominator vanishes.
template <class Ring>
typename Ring::value_type tau(const Ring& ring, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k == 1) return ring.one();
  if (classify_regime(k, ring.beta_sq_value()).tag != RegimeTag::SuperCritical) {
    throw RegimeViolation("tau needs k beta^2 > 1");
  }
  const long kk = k;
  const numeric::RatFun c = engine::mom_symbolic(k).coefficient(ExpPair{kk * kk, 1 - kk});
  auto [num, den] = c.evaluate_parts(ring.t(), ring.zero(), [&ring](const BigRat& v) { return ring.lift(v); });
  if (ring.is_pole(den)) throw PoleAtCriticalBeta("leading coefficient has a pole at this beta");
  return num / den;
}

Scalar tau(int k, const BetaSq& beta_sq, RingKind kind = RingKind::Auto,
           mpfr_prec_t precision = numeric::kDefaultPrecision);

// Growth law actually used for ratio estimation. Matches classify_regime
// except for k = 1, where MoM_n = 2^{b n} in every regime.
Regime growth_law(int k, const BetaSq& beta_sq);

struct NumericCoefficient {
  Scalar value;       // r_{n_hi}
  BigFloat error;     // |r_{n_hi} - r_{n_lo}|
  Scalar value_lo;    // r_{n_lo}
};

// r_n = MoM_n / (n^s 2^{e n}) for the growth law of (k, beta).
template <class Ring>
typename Ring::value_type growth_ratio(const Ring& ring, engine::MomentTable<Ring>& table, const Regime& law,
                                       long n) {
  auto denom = ring.pow2(n * law.exponent);
  for (int i = 0; i < law.n_power; ++i) denom = denom * ring.lift(BigRat(n));
  return table.at(table.k_max(), n) / denom;
}

NumericCoefficient leading_coefficient_numeric(int k, const AnyRing& ring, long n_lo, long n_hi);
NumericCoefficient leading_coefficient_numeric(int k, const BetaSq& beta_sq, long n_lo, long n_hi,
                                               RingKind kind = RingKind::Auto,
                                               mpfr_prec_t precision = numeric::kDefaultPrecision);

struct LeadingTerm {
  Regime regime;
  Scalar coefficient;
  // "exact", "rho", "sigma", "tau" or "numeric"
  std::string method;
  // Error proxy of the numeric method.
  std::optional<BigFloat> error;
};

inline constexpr long kNumericLo = 60;
inline constexpr long kNumericHi = 120;

// Leading term of MoM_n(k, beta). Super-critical beta^2 exactly 1/m with
// 1 < m < k goes through leading_coefficient_numeric on exact radical values.
LeadingTerm leading_term(int k, const BetaSq& beta_sq, RingKind kind = RingKind::Auto,
                         mpfr_prec_t precision = numeric::kDefaultPrecision);

// Returns m when beta^2 is exactly 1/m for an integer m, else 0.
long unit_fraction_index(const BetaSq& beta_sq);

}  // namespace mom::asymptotics
