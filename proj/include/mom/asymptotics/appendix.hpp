#pragma once

#include "mom/asymptotics/regime.hpp"
#include "mom/numeric/bigfloat.hpp"

namespace mom::asymptotics {

// Published closed-form leading coefficients for k = 2..5, evaluated term by
// term exactly as printed. Critical displays exist for k = 2, 3 only; other
// critical requests, k outside 2..5, and a regime that does not match
// (k, beta^2) raise std::invalid_argument or RegimeViolation.
numeric::BigFloat appendix_coefficient(int k, const BetaSq& beta_sq, RegimeTag regime,
                                       mpfr_prec_t precision = numeric::kDefaultPrecision);

bool appendix_supports(int k, RegimeTag regime);

}  // namespace mom::asymptotics
