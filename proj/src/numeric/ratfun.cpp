#include "mom/numeric/ratfun.hpp"

#include <stdexcept>

namespace mom::numeric {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFun RatFun::t_power(long p, long q) {
  const BigRat scale = pow2_rat(q);
  if (p >= 0) return RatFun(Poly::monomial(scale, static_cast<std::size_t>(p)));
  return RatFun(Poly(scale), Poly::monomial(BigRat(1), static_cast<std::size_t>(-p)));
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1L);
    return;
  }
  if (den_.degree() > 0) {
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const BigRat lead = den_.leading();
  if (lead != 1) {
    const BigRat inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFun& RatFun::operator+=(const RatFun& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& rhs) { return *this += -rhs; }

RatFun& RatFun::operator*=(const RatFun& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational function division by zero");
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  normalize();
  return *this;
}

RatFun RatFun::operator-() const {
  RatFun out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string RatFun::to_string(const std::string& var) const {
  if (den_ == Poly(1L)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace mom::numeric
