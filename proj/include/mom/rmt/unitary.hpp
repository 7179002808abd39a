#pragma once

#include <string>

#include "mom/asymptotics/regime.hpp"
#include "mom/numeric/bigfloat.hpp"
#include "mom/numeric/bigrat.hpp"
#include "mom/numeric/ring.hpp"

namespace mom::rmt {

using numeric::BigFloat;
using numeric::BigRat;

// prod_{j=1}^N Gamma(j + 2b) Gamma(j) / Gamma(j + b)^2 through a log-gamma sum.
// Throws DomainError for b <= -1/2 or N < 1.
BigFloat unitary_mom_k1(long N, const BigFloat& beta);
BigFloat unitary_mom_k1(long N, double beta, mpfr_prec_t precision = numeric::kDefaultPrecision);

// prod_{0 <= i, j <= b-1} (N / (i + j + 1) + 1) for integer b >= 1; 1 for b = 0.
BigRat unitary_mom_k1_integer(long N, long beta);

struct GrowthComparison {
  int k = 0;
  // Branching side: 2^{(p b + q) n} n^{n_power}.
  asymptotics::Regime brw;
  double brw_exponent = 0.0;
  // Unitary side: N^{rmt_exponent} (log N)^{rmt_log_power}.
  double rmt_exponent = 0.0;
  int rmt_log_power = 0;
  // Equal growth once N = 2^n, i.e. equal exponents and n <-> log N.
  bool agree = false;
  std::string description;
};

GrowthComparison growth_exponent_compare(int k, const numeric::BetaSq& beta_sq);

}  // namespace mom::rmt
