#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "mom/numeric/bigrat.hpp"

namespace mom::numeric {

inline constexpr mpfr_prec_t kDefaultPrecision = 256;
inline constexpr mpfr_prec_t kMinPrecision = 64;

// Binary floating point on top of MPFR with a per-value precision in bits.
// Arithmetic is rounded to nearest; the result of a binary operation carries
// the larger of the two operand precisions.
class BigFloat {
 public:
  // Precision tag, so that a bare bit count is never mistaken for a value.
  struct Bits {
    mpfr_prec_t value;
  };

  BigFloat() : BigFloat(Bits{kDefaultPrecision}) {}
  // Zero at the given precision.
  explicit BigFloat(Bits precision);
  BigFloat(double value, mpfr_prec_t precision = kDefaultPrecision);
  BigFloat(long value, mpfr_prec_t precision = kDefaultPrecision);
  BigFloat(int value, mpfr_prec_t precision = kDefaultPrecision)
      : BigFloat(static_cast<long>(value), precision) {}
  BigFloat(const BigRat& value, mpfr_prec_t precision = kDefaultPrecision);

  // Parses a decimal literal exactly rounded to `precision`.
  static BigFloat parse(std::string_view text, mpfr_prec_t precision = kDefaultPrecision);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  BigFloat with_precision(mpfr_prec_t precision) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const;
  // Decimal rendering with `digits` significant digits (0 = enough to
  // round-trip the precision).
  std::string to_string(int digits = 0) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat exp2(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log2(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat lgamma(const BigFloat& x);
BigFloat pow(const BigFloat& base, long exponent);

// |a - b| / |b|, or |a| when b is zero.
BigFloat relative_error(const BigFloat& a, const BigFloat& b);

}  // namespace mom::numeric
