#pragma once

#include <string>

#include "mom/numeric/exp_pair.hpp"
#include "mom/numeric/ring.hpp"

namespace mom::asymptotics {

using numeric::BetaSq;
using numeric::ExpPair;

enum class RegimeTag { SubCritical, Critical, SuperCritical };

// Growth of MoM_n(k, beta) as n^{n_power} 2^{(exponent) n}.
struct Regime {
  RegimeTag tag = RegimeTag::SubCritical;
  ExpPair exponent;
  int n_power = 0;
};

// Compares k beta^2 with 1, exactly when beta^2 is rational.
Regime classify_regime(int k, const BetaSq& beta_sq);

std::string regime_name(RegimeTag tag);
// "sub", "critical", "super"
std::string regime_short_name(RegimeTag tag);
RegimeTag parse_regime(const std::string& text);

}  // namespace mom::asymptotics
