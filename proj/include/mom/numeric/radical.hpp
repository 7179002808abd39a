#pragma once

#include <string>
#include <vector>

#include "mom/numeric/bigfloat.hpp"
#include "mom/numeric/bigrat.hpp"

namespace mom::numeric {

// Element of Q(2^{1/m}) stored as sum_j c_j * 2^{j/m}, j = 0..m-1.
//
// The basis is closed under multiplication through (2^{1/m})^m = 2, so
// products only ever fold the upper half of the convolution back with a
// factor of two. Two values interact only when they share the same root
// index; mixing indices raises RingMismatch rather than lifting to a common
// field.
class Radical {
 public:
  Radical(int m, std::vector<BigRat> coeffs);

  static Radical constant(int m, const BigRat& value);
  // 2^{e/m} for any integer e.
  static Radical root_power(int m, long e);

  int index() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  // Multiplicative inverse via the m x m multiplication matrix. Throws
  // std::domain_error on zero.
  Radical inverse() const;

  Radical& operator+=(const Radical& rhs);
  Radical& operator-=(const Radical& rhs);
  Radical& operator*=(const Radical& rhs);
  Radical& operator/=(const Radical& rhs) { return *this *= rhs.inverse(); }

  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
  friend Radical operator*(Radical a, const Radical& b) { return a *= b; }
  friend Radical operator/(Radical a, const Radical& b) { return a /= b; }
  Radical operator-() const;

  friend bool operator==(const Radical& a, const Radical& b);

  BigFloat to_float(mpfr_prec_t precision = kDefaultPrecision) const;

  // Human-readable expression with bare integers, e.g. "8" or
  // "3/2 + 1/2*2^(1/2)".
  std::string to_string() const;

 private:
  std::vector<BigRat> coeffs_;
};

Radical radical_mul(const Radical& a, const Radical& b);

}  // namespace mom::numeric
