#include "mom/numeric/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mom::numeric {

Poly::Poly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const BigRat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::monomial(const BigRat& c, std::size_t degree) {
  std::vector<BigRat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const BigRat& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  BigRat term;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      term = a.coeffs_[i] * b.coeffs_[j];
      out[i + j] += term;
    }
  }
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < divisor.degree()) return {Poly(), *this};

  std::vector<BigRat> rem = coeffs_;
  std::vector<BigRat> quot(static_cast<std::size_t>(degree() - divisor.degree() + 1));
  const BigRat inv_lead = 1 / divisor.leading();
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t top = rem.size(); top-- > dd;) {
    if (rem[top] == 0) continue;
    const BigRat factor = rem[top] * inv_lead;
    const std::size_t shift = top - dd;
    quot[shift] = factor;
    for (std::size_t i = 0; i <= dd; ++i) {
      if (divisor.coeffs_[i] != 0) rem[shift + i] -= factor * divisor.coeffs_[i];
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * BigRat(1 / leading());
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigRat& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const BigRat mag = abs(c);
    const bool unit = (mag == 1);
    if (!unit || i == 0) {
      out << (is_integer(mag) ? mag.get_num().get_str() : "(" + to_fraction_string(mag) + ")");
    }
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace mom::numeric
