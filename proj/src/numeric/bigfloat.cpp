#include "mom/numeric/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace mom::numeric {

namespace {

mpfr_prec_t checked(mpfr_prec_t precision) {
  if (precision < kMinPrecision) {
    throw std::invalid_argument("BigFloat precision must be at least 64 bits");
  }
  return precision;
}

// Bumps the destination to the larger precision before an in-place op.
void widen(mpfr_ptr dst, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(dst)) {
    mpfr_prec_round(dst, mpfr_get_prec(other), MPFR_RNDN);
  }
}

}  // namespace

BigFloat::BigFloat(Bits precision) {
  mpfr_init2(value_, checked(precision.value));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRat& value, mpfr_prec_t precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t precision) {
  BigFloat out(Bits{precision});
  std::string owned(text);
  char* end = nullptr;
  mpfr_strtofr(out.value_, owned.c_str(), &end, 10, MPFR_RNDN);
  if (owned.empty() || end != owned.c_str() + owned.size()) {
    throw std::invalid_argument("not a decimal number: " + owned);
  }
  return out;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_precision(mpfr_prec_t precision) const {
  BigFloat out(Bits{precision});
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::to_string(int digits) const {
  if (!is_finite()) {
    if (mpfr_nan_p(value_)) return "nan";
    return sign() < 0 ? "-inf" : "inf";
  }
  if (digits <= 0) {
    digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
  }
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> guard(raw, &mpfr_free_str);
  return std::string(raw);
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(Bits{precision()});
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

namespace {

template <class Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
  BigFloat out(BigFloat::Bits{x.precision()});
  fn(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat exp2(const BigFloat& x) { return unary(x, mpfr_exp2); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat log2(const BigFloat& x) { return unary(x, mpfr_log2); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }

BigFloat lgamma(const BigFloat& x) {
  BigFloat out(BigFloat::Bits{x.precision()});
  mpfr_lngamma(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& base, long exponent) {
  BigFloat out(BigFloat::Bits{base.precision()});
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

BigFloat relative_error(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) return abs(a);
  return abs(a - b) / abs(b);
}

}  // namespace mom::numeric
