#include "mom/numeric/geometric.hpp"

namespace mom::numeric {

GenPoly geometric_sum(ExpPair a) {
  if (a.is_zero()) throw DegenerateExponent("geometric sum with zero exponent has no closed form");
  const RatFun inv = RatFun(1L) / (RatFun::t_power(a.p, a.q) - RatFun(1L));
  GenPoly out;
  out.add_term(a, inv);
  out.add_term(ExpPair{}, -inv);
  return out;
}

}  // namespace mom::numeric
