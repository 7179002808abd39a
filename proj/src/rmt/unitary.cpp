#include "mom/rmt/unitary.hpp"

#include <cmath>
#include <sstream>

#include "mom/asymptotics/coefficients.hpp"
#include "mom/errors.hpp"

namespace mom::rmt {

BigFloat unitary_mom_k1(long N, const BigFloat& beta) {
  if (N < 1) throw DomainError("N must be at least 1");
  const mpfr_prec_t prec = beta.precision();
  if (!(beta > BigFloat(numeric::make_rational(-1, 2), prec))) throw DomainError("need beta > -1/2");
  const BigFloat two_beta = beta * BigFloat(2L, prec);
  BigFloat acc(BigFloat::Bits{prec});
  for (long j = 1; j <= N; ++j) {
    const BigFloat jj(j, prec);
    acc += lgamma(jj + two_beta) + lgamma(jj) - BigFloat(2L, prec) * lgamma(jj + beta);
  }
  return exp(acc);
}

BigFloat unitary_mom_k1(long N, double beta, mpfr_prec_t precision) {
  return unitary_mom_k1(N, BigFloat(beta, precision));
}

BigRat unitary_mom_k1_integer(long N, long beta) {
  if (beta < 0) throw DomainError("integer beta must be nonnegative");
  if (N < 0) throw DomainError("N must be nonnegative");
  BigRat out(1);
  for (long i = 0; i < beta; ++i) {
    for (long j = 0; j < beta; ++j) out *= numeric::make_rational(N, i + j + 1) + 1;
  }
  return out;
}

GrowthComparison growth_exponent_compare(int k, const numeric::BetaSq& beta_sq) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  GrowthComparison out;
  out.k = k;
  out.brw = asymptotics::growth_law(k, beta_sq);
  const double b = beta_sq.to_double();
  out.brw_exponent = static_cast<double>(out.brw.exponent.p) * b + static_cast<double>(out.brw.exponent.q);

  // Unitary side: N^{k b} for k < 1/b, N log N at k = 1/b, N^{k^2 b - k + 1}
  // beyond; k = 1 has no transition.
  const double kd = k;
  if (k == 1) {
    out.rmt_exponent = b;
  } else if (beta_sq.is_exact() ? beta_sq.exact() * k == 1 : kd * b == 1.0) {
    out.rmt_exponent = 1.0;
    out.rmt_log_power = 1;
  } else if (kd * b < 1.0) {
    out.rmt_exponent = kd * b;
  } else {
    out.rmt_exponent = kd * kd * b - kd + 1.0;
  }

  out.agree = std::abs(out.brw_exponent - out.rmt_exponent) <= 1e-12 * std::max(1.0, std::abs(out.rmt_exponent)) &&
              out.brw.n_power == out.rmt_log_power;
  std::ostringstream d;
  d << "BRW ";
  if (out.brw.n_power) d << "n*";
  d << "2^(" << out.brw_exponent << " n) vs U(N) ";
  d << "N^" << out.rmt_exponent;
  if (out.rmt_log_power) d << " log N";
  out.description = d.str();
  return out;
}

}  // namespace mom::rmt
