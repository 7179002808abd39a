// Transcribed leading coefficients. Each expression keeps the term order,
// grouping and signs of the printed display so that a reviewer can compare
// line by line; nothing here is simplified.
#include "mom/asymptotics/appendix.hpp"

#include <stdexcept>

#include "mom/errors.hpp"

namespace mom::asymptotics {

using numeric::BigFloat;

namespace {

struct Terms {
  BigFloat b;  // beta^2
  mpfr_prec_t prec;

  // 2^{a beta^2 + c}
  BigFloat P(long a, long c = 0) const {
    return exp2(b * BigFloat(a, prec) + BigFloat(c, prec));
  }
  BigFloat N(long v) const { return BigFloat(v, prec); }
};

BigFloat k2_sub(const Terms& x) {
  // 1 / (2 (1 - 2^{2b-1}))
  return x.N(1) / (x.N(2) * (x.N(1) - x.P(2, -1)));
}

BigFloat k2_super(const Terms& x) {
  // (2^{2b} - 1) / (2 (2^{2b-1} - 1))
  return (x.P(2) - x.N(1)) / (x.N(2) * (x.P(2, -1) - x.N(1)));
}

BigFloat k3_sub(const Terms& x) {
  // 3 2^{2b} / ((2^2 - 2^{6b}) (2 - 2^{2b}))
  return x.N(3) * x.P(2) / ((x.N(4) - x.P(6)) * (x.N(2) - x.P(2)));
}

BigFloat k3_critical(mpfr_prec_t prec) {
  // 3 / (2^{7/3} - 2^2)
  const BigFloat seven_thirds = BigFloat(7L, prec) / BigFloat(3L, prec);
  return BigFloat(3L, prec) / (exp2(seven_thirds) - BigFloat(4L, prec));
}

BigFloat k3_super(const Terms& x) {
  // 1 + 3 (2^{6b} - 2) / ((2^{4b} - 2) (2^{6b} - 2^2))
  return x.N(1) + x.N(3) * (x.P(6) - x.N(2)) / ((x.P(4) - x.N(2)) * (x.P(6) - x.N(4)));
}

BigFloat k4_sub(const Terms& x) {
  const BigFloat two_minus = x.N(2) - x.P(2);
  // 3 2^{8b+2} / ((2 - 2^{2b}) (4 - 2^{6b}) (8 - 2^{12b}))
  BigFloat out = x.N(3) * x.P(8, 2) / (two_minus * (x.N(4) - x.P(6)) * (x.N(8) - x.P(12)));
  // + 3 2^{8b-3} / ((2 - 2^{2b})^2 (2^{4b} - 2^{16b-3}))
  out += x.N(3) * x.P(8, -3) / (two_minus * two_minus * (x.P(4) - x.P(16, -3)));
  return out;
}

BigFloat k4_super(const Terms& x) {
  const BigFloat A = x.P(2) - x.N(2);  // 2^{2b} - 2
  // 1 + 4 / (2^{6b} - 2)
  BigFloat out = x.N(1) + x.N(4) / (x.P(6) - x.N(2));

  // 12 [ ... ]
  BigFloat bracket = x.N(1) / ((x.P(4) - x.N(2)) * (x.P(6) - x.N(4)));
  bracket -= (x.P(6) - x.P(4)) / (A * (x.P(4) - x.N(2)) * (x.P(10) - x.N(4)));
  bracket += x.P(8) / (A * (x.P(6) - x.N(4)) * (x.P(12) - x.N(8)));
  out += x.N(12) * bracket;

  // 3 2^{8b-3} [ ... ]
  BigFloat second = x.N(1) / (A * A * (x.P(16, -3) - x.P(4)));
  second -= x.P(-6, 2) / (A * A * (x.P(10, -2) - x.N(1)));
  second -= x.N(1) / (A * (x.P(16, -3) - x.P(6, -1)));
  second += x.N(1) / (A * (x.P(16, -3) - x.P(8, -2)));
  second += x.N(1) / (x.P(16, -3) - x.P(8, -2));
  second += x.P(-8, 2) / (A * A * (x.P(8, -1) - x.N(1)));
  out += x.N(3) * x.P(8, -3) * second;
  return out;
}

BigFloat k5_sub(const Terms& x) {
  const BigFloat two_minus = x.N(2) - x.P(2);
  // 15 2^{10b+1} / ((2 - 2^{2b}) (4 - 2^{6b}) (16 - 2^{20b}))
  BigFloat out = x.N(15) * x.P(10, 1) / (two_minus * (x.N(4) - x.P(6)) * (x.N(16) - x.P(20)));
  // + 15 2^{20b+2} / ((2 - 2^{2b}) (4 - 2^{6b}) (8 - 2^{12b}) (16 - 2^{20b}))
  out += x.N(15) * x.P(20, 2) / (two_minus * (x.N(4) - x.P(6)) * (x.N(8) - x.P(12)) * (x.N(16) - x.P(20)));
  // + 15 2^{16b} / ((2 - 2^{2b})^2 (8 - 2^{12b}) (16 - 2^{20b}))
  out += x.N(15) * x.P(16) / (two_minus * two_minus * (x.N(8) - x.P(12)) * (x.N(16) - x.P(20)));
  return out;
}

BigFloat k5_super(const Terms& x) {
  const BigFloat A = x.P(2) - x.N(2);  // 2^{2b} - 2
  const BigFloat B = x.P(2) - x.N(1);  // 2^{2b} - 1
  const BigFloat A2 = A * A;
  auto f = [&x](long a, long c) { return x.P(a) - x.N(c); };  // 2^{ab} - c

  BigFloat s = x.N(30) * f(6, 2) * B / (A * f(4, 2) * f(6, 4) * f(12, 2));
  s -= x.N(15) * x.P(4, 1) * B * B / (A2 * f(4, 2) * f(16, 4));
  s += x.N(10) * B / (A * f(12, 2));
  s += x.N(15) * x.P(6, 1) * B / (A2 * f(4, 2) * f(18, 8));
  s += x.N(15) * x.P(8, 1) * B / (A2 * f(6, 4) * f(18, 8));
  s += x.N(60) / (f(4, 2) * f(6, 4) * f(8, 2));
  s += x.N(20) / (f(6, 2) * f(8, 2));
  s += x.N(5) / f(8, 2);
  s -= x.N(60) * (x.P(6) - x.P(4)) / (A * f(4, 2) * f(8, 2) * f(10, 4));
  s -= x.N(15) * x.P(2) / (A * f(8, 2) * f(10, 4));
  s -= x.N(15) * x.P(2, 1) / (A2 * f(8, 2) * f(10, 4));
  s += x.N(15) * x.P(8, 2) / (A * f(6, 4) * f(8, 2) * f(12, 8));
  s += x.N(15) * x.P(4) / (A2 * f(8, 2) * f(12, 8));
  s -= x.N(15) * x.P(2, 1) * f(6, 2) / (A * f(4, 2) * f(6, 4) * f(14, 4));
  s -= x.N(5) * x.P(2, 1) / (A * f(14, 4));
  s -= x.N(15) * x.P(6, 2) / (f(4, 2) * f(6, 4) * f(14, 4));
  s -= x.N(5) * x.P(6, 2) / (f(6, 2) * f(14, 4));
  s -= x.N(15) * x.P(8) / (f(8, 2) * f(16, 4));
  s -= x.N(15) * x.P(8) / (A * f(8, 2) * f(16, 4));
  s -= x.N(15) * x.P(8) / (A2 * f(8, 2) * f(16, 4));
  s += x.N(60) * (x.P(16) - x.P(14)) / (A * f(4, 2) * f(10, 4) * f(18, 8));
  s += x.N(15) * x.P(12) / (A * f(10, 4) * f(18, 8));
  s += x.N(15) * x.P(12, 1) / (A2 * f(10, 4) * f(18, 8));
  s -= x.N(15) * x.P(10, 1) / (A2 * f(6, 4) * f(20, 16));
  s -= x.N(15) * x.P(20, 2) / (A * f(6, 4) * f(12, 8) * f(20, 16));
  s -= x.N(15) * x.P(16) / (A2 * f(12, 8) * f(20, 16));
  s += x.N(15) / (A * f(8, 2) * f(8, 2));
  s += x.N(15) / (A2 * f(8, 2) * f(8, 2));
  s += x.N(15) / (f(8, 2) * f(8, 2));
  s += x.N(1);
  return s;
}

}  // namespace

bool appendix_supports(int k, RegimeTag regime) {
  if (k < 2 || k > 5) return false;
  if (regime == RegimeTag::Critical) return k <= 3;
  return true;
}

BigFloat appendix_coefficient(int k, const BetaSq& beta_sq, RegimeTag regime, mpfr_prec_t precision) {
  if (!appendix_supports(k, regime)) {
    throw std::invalid_argument("no transcribed coefficient for k=" + std::to_string(k) + " in the " +
                                regime_short_name(regime) + " regime");
  }
  if (classify_regime(k, beta_sq).tag != regime) {
    throw RegimeViolation("regime does not match k and beta^2");
  }
  const Terms x{beta_sq.to_float(precision), precision};
  switch (regime) {
    case RegimeTag::Critical:
      return k == 2 ? BigFloat(numeric::make_rational(1, 2), precision) : k3_critical(precision);
    case RegimeTag::SubCritical:
      switch (k) {
        case 2: return k2_sub(x);
        case 3: return k3_sub(x);
        case 4: return k4_sub(x);
        default: return k5_sub(x);
      }
    case RegimeTag::SuperCritical:
      switch (k) {
        case 2: return k2_super(x);
        case 3: return k3_super(x);
        case 4: return k4_super(x);
        default: return k5_super(x);
      }
  }
  throw std::logic_error("unreachable");
}

}  // namespace mom::asymptotics
