#include "mom/numeric/ring.hpp"

#include <stdexcept>

#include "mom/errors.hpp"

namespace mom::numeric {

BetaSq BetaSq::from_double(double beta_sq, mpfr_prec_t precision) {
  return BetaSq(BigFloat(beta_sq, precision));
}

const BigRat& BetaSq::exact() const {
  if (!is_exact()) throw std::logic_error("beta^2 is not exact");
  return std::get<BigRat>(value_);
}

BigFloat BetaSq::to_float(mpfr_prec_t precision) const {
  if (is_exact()) return BigFloat(std::get<BigRat>(value_), precision);
  return std::get<BigFloat>(value_).with_precision(precision);
}

double BetaSq::to_double() const {
  if (is_exact()) return std::get<BigRat>(value_).get_d();
  return std::get<BigFloat>(value_).to_double();
}

int BetaSq::sign() const {
  if (is_exact()) return sgn(std::get<BigRat>(value_));
  return std::get<BigFloat>(value_).sign();
}

std::string BetaSq::to_string() const {
  if (is_exact()) return to_fraction_string(std::get<BigRat>(value_));
  return std::get<BigFloat>(value_).to_string(20);
}

RationalRing::RationalRing(long beta_sq) : beta_sq_(beta_sq) {
  if (beta_sq < 0) throw DomainError("beta^2 must be nonnegative");
}

RadicalRing::RadicalRing(long a, long m) : a_(a), m_(m) {
  if (m < 1) throw std::invalid_argument("radical root index must be positive");
  if (a < 0) throw DomainError("beta^2 must be nonnegative");
  const BigRat check = make_rational(a, m);
  if (check.get_den() != m) throw std::invalid_argument("beta^2 = a/m must be in lowest terms");
}

FloatRing::FloatRing(const BigFloat& beta_sq, mpfr_prec_t precision)
    : beta_sq_(beta_sq.with_precision(precision)), precision_(precision) {
  if (precision < kMinPrecision) throw std::invalid_argument("precision below 64 bits");
  if (beta_sq.sign() < 0) throw DomainError("beta^2 must be nonnegative");
}

BigFloat FloatRing::pow2(ExpPair e) const {
  BigFloat x = beta_sq_ * BigFloat(e.p, precision_);
  x += BigFloat(e.q, precision_);
  return exp2(x);
}

bool FloatRing::is_pole(const BigFloat& den) const {
  BigFloat threshold = exp2(BigFloat(-static_cast<long>(precision_ / 2), precision_));
  return abs(den) < threshold;
}

AnyRing make_ring(const BetaSq& beta_sq, RingKind kind, mpfr_prec_t precision) {
  if (beta_sq.sign() < 0) throw DomainError("beta^2 must be nonnegative");
  const bool exact = beta_sq.is_exact();
  auto as_rational = [&]() -> AnyRing {
    if (!exact || !is_integer(beta_sq.exact()) || !beta_sq.exact().get_num().fits_slong_p()) {
      throw RingMismatch("rational ring needs an integer beta^2, got " + beta_sq.to_string());
    }
    return RationalRing(beta_sq.exact().get_num().get_si());
  };
  auto as_radical = [&]() -> AnyRing {
    if (!exact) throw RingMismatch("radical ring needs an exact rational beta^2");
    const BigRat& r = beta_sq.exact();
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p()) {
      throw RingMismatch("beta^2 numerator or denominator out of range");
    }
    return RadicalRing(r.get_num().get_si(), r.get_den().get_si());
  };
  switch (kind) {
    case RingKind::Rational:
      return as_rational();
    case RingKind::Radical:
      return as_radical();
    case RingKind::Float:
      return FloatRing(beta_sq.to_float(precision), precision);
    case RingKind::Auto:
      break;
  }
  if (exact) {
    const BigRat& r = beta_sq.exact();
    if (is_integer(r) && r.get_num().fits_slong_p()) return as_rational();
    if (r.get_den() <= kMaxAutoRadicalIndex && r.get_num().fits_slong_p()) return as_radical();
  }
  return FloatRing(beta_sq.to_float(precision), precision);
}

std::string ring_name(const AnyRing& ring) {
  return std::visit([](const auto& r) { return r.name(); }, ring);
}

RingKind parse_ring_kind(const std::string& text) {
  if (text == "auto") return RingKind::Auto;
  if (text == "rational") return RingKind::Rational;
  if (text == "radical") return RingKind::Radical;
  if (text == "float") return RingKind::Float;
  throw std::invalid_argument("unknown ring: " + text);
}

BigFloat scalar_to_float(const Scalar& value, mpfr_prec_t precision) {
  struct Visitor {
    mpfr_prec_t precision;
    BigFloat operator()(const BigRat& v) const { return BigFloat(v, precision); }
    BigFloat operator()(const Radical& v) const { return v.to_float(precision); }
    BigFloat operator()(const BigFloat& v) const { return v.with_precision(precision); }
  };
  return std::visit(Visitor{precision}, value);
}

bool scalar_is_exact(const Scalar& value) { return !std::holds_alternative<BigFloat>(value); }

std::string scalar_to_string(const Scalar& value, int digits) {
  struct Visitor {
    int digits;
    std::string operator()(const BigRat& v) const { return to_fraction_string(v); }
    std::string operator()(const Radical& v) const { return v.to_string(); }
    std::string operator()(const BigFloat& v) const { return v.to_string(digits); }
  };
  return std::visit(Visitor{digits}, value);
}

}  // namespace mom::numeric
