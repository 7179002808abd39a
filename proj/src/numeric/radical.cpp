#include "mom/numeric/radical.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "mom/errors.hpp"

namespace mom::numeric {

namespace {

void require_same_index(const Radical& a, const Radical& b) {
  if (a.index() != b.index()) {
    throw RingMismatch("radical root index mismatch: " + std::to_string(a.index()) + " vs " +
                       std::to_string(b.index()));
  }
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string bare_rational(const BigRat& value) {
  if (is_integer(value)) return value.get_num().get_str();
  return to_fraction_string(value);
}

}  // namespace

Radical::Radical(int m, std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
  if (m < 1) throw std::invalid_argument("radical root index must be positive");
  if (static_cast<int>(coeffs_.size()) != m) {
    throw std::invalid_argument("radical coefficient vector must have exactly m entries");
  }
}

Radical Radical::constant(int m, const BigRat& value) {
  std::vector<BigRat> c(static_cast<std::size_t>(m));
  c[0] = value;
  return Radical(m, std::move(c));
}

Radical Radical::root_power(int m, long e) {
  const long whole = floor_div(e, m);
  const long frac = e - whole * m;
  std::vector<BigRat> c(static_cast<std::size_t>(m));
  c[static_cast<std::size_t>(frac)] = pow2_rat(whole);
  return Radical(m, std::move(c));
}

bool Radical::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool Radical::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return false;
  }
  return true;
}

Radical& Radical::operator+=(const Radical& rhs) {
  require_same_index(*this, rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

Radical& Radical::operator-=(const Radical& rhs) {
  require_same_index(*this, rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

Radical& Radical::operator*=(const Radical& rhs) {
  *this = radical_mul(*this, rhs);
  return *this;
}

Radical Radical::operator-() const {
  Radical out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const Radical& a, const Radical& b) {
  require_same_index(a, b);
  return a.coeffs_ == b.coeffs_;
}

Radical radical_mul(const Radical& a, const Radical& b) {
  require_same_index(a, b);
  const std::size_t m = a.coeffs().size();
  std::vector<BigRat> out(m);
  BigRat term;
  for (std::size_t i = 0; i < m; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b.coeffs()[j] == 0) continue;
      term = a.coeffs()[i] * b.coeffs()[j];
      const std::size_t s = i + j;
      if (s < m) {
        out[s] += term;
      } else {
        out[s - m] += 2 * term;
      }
    }
  }
  return Radical(static_cast<int>(m), std::move(out));
}

Radical Radical::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero radical");
  const std::size_t m = coeffs_.size();
  if (m == 1) return Radical::constant(1, 1 / coeffs_[0]);

  // Column j of the matrix holds the coefficients of this * 2^{j/m}; solve
  // matrix * x = e_0 by Gauss-Jordan elimination over Q.
  std::vector<std::vector<BigRat>> a(m, std::vector<BigRat>(m + 1));
  for (std::size_t j = 0; j < m; ++j) {
    const Radical column = radical_mul(*this, Radical::root_power(static_cast<int>(m), static_cast<long>(j)));
    for (std::size_t i = 0; i < m; ++i) a[i][j] = column.coeffs_[i];
  }
  a[0][m] = 1;

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw std::domain_error("singular multiplication matrix");
    std::swap(a[col], a[pivot]);
    const BigRat scale = 1 / a[col][col];
    for (std::size_t k = col; k <= m; ++k) a[col][k] *= scale;
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const BigRat factor = a[row][col];
      for (std::size_t k = col; k <= m; ++k) a[row][k] -= factor * a[col][k];
    }
  }

  std::vector<BigRat> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = a[i][m];
  return Radical(static_cast<int>(m), std::move(out));
}

BigFloat Radical::to_float(mpfr_prec_t precision) const {
  const long m = static_cast<long>(coeffs_.size());
  BigFloat sum(BigFloat::Bits{precision});
  for (long j = 0; j < m; ++j) {
    if (coeffs_[static_cast<std::size_t>(j)] == 0) continue;
    const BigFloat root = exp2(BigFloat(make_rational(j, m), precision));
    sum += BigFloat(coeffs_[static_cast<std::size_t>(j)], precision) * root;
  }
  return sum;
}

std::string Radical::to_string() const {
  std::ostringstream out;
  bool first = true;
  const int m = index();
  for (int j = 0; j < m; ++j) {
    const BigRat& c = coeffs_[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    const BigRat shown = first ? c : BigRat(abs(c));
    if (j == 0) {
      out << bare_rational(shown);
    } else {
      out << bare_rational(shown) << "*2^(" << bare_rational(make_rational(j, m)) << ")";
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace mom::numeric
