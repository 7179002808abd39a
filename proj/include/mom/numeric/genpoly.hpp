#pragma once

#include <map>
#include <string>

#include "mom/numeric/exp_pair.hpp"
#include "mom/numeric/ratfun.hpp"

namespace mom::numeric {

// Generalized exponential polynomial sum_e c_e(t) * 2^{(e.p beta^2 + e.q) n}.
// Zero coefficients are never stored.
class GenPoly {
 public:
  using Terms = std::map<ExpPair, RatFun>;

  GenPoly() = default;
  static GenPoly term(ExpPair e, RatFun c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // Zero when the exponent is absent.
  RatFun coefficient(ExpPair e) const;

  void add_term(ExpPair e, const RatFun& c);

  GenPoly& operator+=(const GenPoly& rhs);
  GenPoly& operator-=(const GenPoly& rhs);
  GenPoly& operator*=(const RatFun& scalar);

  friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
  friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(GenPoly a, const RatFun& s) { return a *= s; }
  friend bool operator==(const GenPoly& a, const GenPoly& b) = default;

  // Multiplies every term by 2^{shift n}.
  GenPoly shifted(ExpPair shift) const;

  // Sum of coefficients: the value at n = 0.
  RatFun at_zero() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace mom::numeric
