#pragma once

#include <string>

#include "mom/numeric/polynomial.hpp"

namespace mom::numeric {

// Element of Q(t), kept as num/den with gcd(num, den) = 1 and den monic.
// Zero is 0/1.
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(const BigRat& c) : num_(c), den_(1) {}
  RatFun(long c) : RatFun(BigRat(c)) {}
  explicit RatFun(Poly p) : num_(std::move(p)), den_(1) {}
  // Throws std::domain_error when den is the zero polynomial.
  RatFun(Poly num, Poly den);

  // 2^q t^p; p may be negative.
  static RatFun t_power(long p, long q = 0);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFun& operator+=(const RatFun& rhs);
  RatFun& operator-=(const RatFun& rhs);
  RatFun& operator*=(const RatFun& rhs);
  RatFun& operator/=(const RatFun& rhs);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const;
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  // Value at t = x as a (numerator, denominator) pair, so the caller can
  // decide what a vanishing denominator means.
  template <class V, class Lift>
  std::pair<V, V> evaluate_parts(const V& x, const V& zero, Lift&& lift) const {
    return {num_.evaluate(x, zero, lift), den_.evaluate(x, zero, lift)};
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace mom::numeric
