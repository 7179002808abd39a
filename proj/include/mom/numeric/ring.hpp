#pragma once

#include <string>
#include <variant>

#include "mom/numeric/bigfloat.hpp"
#include "mom/numeric/bigrat.hpp"
#include "mom/numeric/exp_pair.hpp"
#include "mom/numeric/radical.hpp"

namespace mom::numeric {

enum class RingKind { Auto, Rational, Radical, Float };

// Largest root index the auto selection will hand to the radical ring;
// beyond it the float ring is cheaper and just as useful.
inline constexpr long kMaxAutoRadicalIndex = 64;

// beta^2, either an exact rational or a binary float.
class BetaSq {
 public:
  BetaSq(const BigRat& exact) : value_(exact) {}
  BetaSq(long exact) : value_(BigRat(exact)) {}
  BetaSq(const BigFloat& approx) : value_(approx) {}
  // Decimal beta^2, kept as a float at the given precision.
  static BetaSq from_double(double beta_sq, mpfr_prec_t precision = kDefaultPrecision);

  bool is_exact() const { return std::holds_alternative<BigRat>(value_); }
  // Throws std::logic_error when the value is not exact.
  const BigRat& exact() const;
  BigFloat to_float(mpfr_prec_t precision = kDefaultPrecision) const;
  double to_double() const;
  int sign() const;
  std::string to_string() const;

 private:
  std::variant<BigRat, BigFloat> value_;
};

// Integer beta^2: everything lives in Q and t = 2^{beta^2} is an integer.
class RationalRing {
 public:
  using value_type = BigRat;

  explicit RationalRing(long beta_sq);

  long beta_sq() const { return beta_sq_; }
  BetaSq beta_sq_value() const { return BetaSq(beta_sq_); }
  BigRat pow2(ExpPair e) const { return pow2_rat(e.p * beta_sq_ + e.q); }
  BigRat t() const { return pow2(ExpPair{1, 0}); }
  BigRat zero() const { return BigRat(0); }
  BigRat one() const { return BigRat(1); }
  BigRat lift(const BigRat& c) const { return c; }
  bool is_pole(const BigRat& den) const { return den == 0; }
  bool is_zero(const BigRat& v) const { return v == 0; }
  BigFloat to_float(const BigRat& v, mpfr_prec_t precision) const { return BigFloat(v, precision); }
  static constexpr bool exact = true;
  std::string name() const { return "rational"; }

 private:
  long beta_sq_;
};

// beta^2 = a/m in lowest terms; values in Q(2^{1/m}).
class RadicalRing {
 public:
  using value_type = Radical;

  RadicalRing(long a, long m);

  long numerator() const { return a_; }
  long index() const { return m_; }
  BetaSq beta_sq_value() const { return BetaSq(make_rational(a_, m_)); }
  Radical pow2(ExpPair e) const { return Radical::root_power(static_cast<int>(m_), e.p * a_ + e.q * m_); }
  Radical t() const { return pow2(ExpPair{1, 0}); }
  Radical zero() const { return Radical::constant(static_cast<int>(m_), 0); }
  Radical one() const { return Radical::constant(static_cast<int>(m_), 1); }
  Radical lift(const BigRat& c) const { return Radical::constant(static_cast<int>(m_), c); }
  bool is_pole(const Radical& den) const { return den.is_zero(); }
  bool is_zero(const Radical& v) const { return v.is_zero(); }
  BigFloat to_float(const Radical& v, mpfr_prec_t precision) const { return v.to_float(precision); }
  static constexpr bool exact = true;
  std::string name() const { return "radical(" + std::to_string(m_) + ")"; }

 private:
  long a_;
  long m_;
};

// Any real beta^2 at a fixed working precision.
class FloatRing {
 public:
  using value_type = BigFloat;

  FloatRing(const BigFloat& beta_sq, mpfr_prec_t precision);

  const BigFloat& beta_sq() const { return beta_sq_; }
  mpfr_prec_t precision() const { return precision_; }
  BetaSq beta_sq_value() const { return BetaSq(beta_sq_); }
  BigFloat pow2(ExpPair e) const;
  BigFloat t() const { return pow2(ExpPair{1, 0}); }
  BigFloat zero() const { return BigFloat(0L, precision_); }
  BigFloat one() const { return BigFloat(1L, precision_); }
  BigFloat lift(const BigRat& c) const { return BigFloat(c, precision_); }
  // |den| below 2^{-precision/2} counts as a pole.
  bool is_pole(const BigFloat& den) const;
  bool is_zero(const BigFloat& v) const { return v.is_zero(); }
  BigFloat to_float(const BigFloat& v, mpfr_prec_t precision) const { return v.with_precision(precision); }
  static constexpr bool exact = false;
  std::string name() const { return "float"; }

 private:
  BigFloat beta_sq_;
  mpfr_prec_t precision_;
};

using AnyRing = std::variant<RationalRing, RadicalRing, FloatRing>;
using Scalar = std::variant<BigRat, Radical, BigFloat>;

// Auto picks rational for integer beta^2, radical for other exact values with
// a small enough denominator, float otherwise. An explicit kind that cannot
// represent beta^2 raises RingMismatch; negative beta^2 raises DomainError.
AnyRing make_ring(const BetaSq& beta_sq, RingKind kind = RingKind::Auto,
                  mpfr_prec_t precision = kDefaultPrecision);

std::string ring_name(const AnyRing& ring);
RingKind parse_ring_kind(const std::string& text);

BigFloat scalar_to_float(const Scalar& value, mpfr_prec_t precision = kDefaultPrecision);
bool scalar_is_exact(const Scalar& value);
// "n/d" for rationals, the radical expression, or a decimal float.
std::string scalar_to_string(const Scalar& value, int digits = 0);

}  // namespace mom::numeric
