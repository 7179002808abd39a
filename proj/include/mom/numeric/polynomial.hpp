#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mom/numeric/bigrat.hpp"

namespace mom::numeric {

// Dense univariate polynomial over Q; coeffs()[i] multiplies t^i. The zero
// polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRat> coeffs);
  Poly(const BigRat& constant);
  Poly(long constant) : Poly(BigRat(constant)) {}

  // c * t^degree
  static Poly monomial(const BigRat& c, std::size_t degree);

  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const BigRat& leading() const { return coeffs_.back(); }
  BigRat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRat(0); }

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const BigRat& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigRat& s) { return a *= s; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Euclidean division; throws std::domain_error for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  Poly monic() const;

  // Horner evaluation in any ring; `lift` maps a BigRat coefficient into it.
  template <class V, class Lift>
  V evaluate(const V& x, const V& zero, Lift&& lift) const {
    V acc = zero;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x;
      if (*it != 0) acc = acc + lift(*it);
    }
    return acc;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

}  // namespace mom::numeric
