#include "mom/asymptotics/regime.hpp"

#include <stdexcept>

namespace mom::asymptotics {

Regime classify_regime(int k, const BetaSq& beta_sq) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  int cmp = 0;
  if (beta_sq.is_exact()) {
    cmp = ::cmp(numeric::BigRat(beta_sq.exact() * k), 1);
  } else {
    const numeric::BigFloat kb = beta_sq.to_float() * numeric::BigFloat(static_cast<long>(k));
    const numeric::BigFloat one(1L);
    cmp = kb < one ? -1 : (kb > one ? 1 : 0);
  }
  const long kk = k;
  if (cmp < 0) return Regime{RegimeTag::SubCritical, ExpPair{kk, 0}, 0};
  if (cmp == 0) return Regime{RegimeTag::Critical, ExpPair{0, 1}, 1};
  return Regime{RegimeTag::SuperCritical, ExpPair{kk * kk, 1 - kk}, 0};
}

std::string regime_name(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::SubCritical:
      return "SubCritical";
    case RegimeTag::Critical:
      return "Critical";
    case RegimeTag::SuperCritical:
      return "SuperCritical";
  }
  return "?";
}

std::string regime_short_name(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::SubCritical:
      return "sub";
    case RegimeTag::Critical:
      return "critical";
    case RegimeTag::SuperCritical:
      return "super";
  }
  return "?";
}

RegimeTag parse_regime(const std::string& text) {
  if (text == "sub" || text == "SubCritical") return RegimeTag::SubCritical;
  if (text == "critical" || text == "Critical") return RegimeTag::Critical;
  if (text == "super" || text == "SuperCritical") return RegimeTag::SuperCritical;
  throw std::invalid_argument("unknown regime: " + text);
}

}  // namespace mom::asymptotics
