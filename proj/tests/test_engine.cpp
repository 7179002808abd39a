#include <gtest/gtest.h>

#include "mom/engine/mom.hpp"

using namespace mom;
using namespace mom::numeric;
using mom::engine::mom_dp;

namespace {

BigRat q(long n, long d = 1) { return make_rational(n, d); }

// Literal lambda-sum over the first split level, recursing on shallower
// depths; deliberately naive and independent of MomentTable.
template <class Ring>
typename Ring::value_type termwise(const Ring& ring, int k, long n) {
  using V = typename Ring::value_type;
  if (n == 0) return ring.one();
  if (k == 1) return ring.pow2(ExpPair{n, 0});
  const long kk = k;
  V sum = ring.zero();
  for (long lambda = 0; lambda < n; ++lambda) {
    V inner = ring.zero();
    for (long j = 1; j < kk; ++j) {
      inner = inner + ring.lift(BigRat(binomial(static_cast<unsigned long>(kk), static_cast<unsigned long>(j)))) *
                          ring.pow2(ExpPair{2 * j * (j - kk), 0}) * termwise(ring, static_cast<int>(j), n - lambda - 1) *
                          termwise(ring, static_cast<int>(kk - j), n - lambda - 1);
    }
    sum = sum + ring.pow2(lambda * ExpPair{kk * kk, 1 - kk}) * inner;
  }
  return ring.pow2(ExpPair{kk * kk, -kk}) * sum + ring.pow2(n * ExpPair{kk * kk, 1 - kk});
}


}  // namespace

TEST(MomDp, Examples) {
  EXPECT_EQ(std::get<BigRat>(mom_dp(1, 3, BetaSq(4L))), q(4096));
  EXPECT_EQ(std::get<BigRat>(mom_dp(2, 1, BetaSq(1L))), q(10));
  EXPECT_EQ(std::get<BigRat>(mom_dp(3, 7, BetaSq(0L))), q(1));
  EXPECT_EQ(std::get<BigFloat>(mom_dp(5, 0, BetaSq(BigFloat::parse("0.49")))), BigFloat(1L));
  const Scalar crit = mom_dp(2, 2, BetaSq(q(1, 2)), RingKind::Radical);
  EXPECT_EQ(std::get<Radical>(crit), Radical::constant(2, 8));
}

TEST(MomDp, Errors) {
  EXPECT_THROW(mom_dp(0, 3, BetaSq(1L)), std::invalid_argument);
  EXPECT_THROW(mom_dp(2, -1, BetaSq(1L)), std::invalid_argument);
  EXPECT_THROW(mom_dp(2, 3, BetaSq(q(1, 2)), RingKind::Rational), RingMismatch);
  EXPECT_THROW(mom_dp(2, 3, BetaSq::from_double(0.5), RingKind::Radical), RingMismatch);
}

TEST(MomDp, MatchesTermwiseLambdaSum) {
  const RationalRing r1(1);
  const RadicalRing r3(1, 3);
  const FloatRing rf(BigFloat::parse("0.3"), 256);
  for (int k = 1; k <= 4; ++k) {
    for (long n = 0; n <= 6; ++n) {
      EXPECT_EQ(mom_dp(r1, k, n), termwise(r1, k, n)) << k << " " << n;
      EXPECT_EQ(mom_dp(r3, k, n), termwise(r3, k, n)) << k << " " << n;
      EXPECT_LT(relative_error(mom_dp(rf, k, n), termwise(rf, k, n)), BigFloat(1e-60)) << k << " " << n;
    }
  }
}

TEST(MomDp, CriticalKTwoIsExact) {
  const RadicalRing ring(1, 2);
  engine::MomentTable<RadicalRing> table(ring, 2);
  for (long n = 0; n <= 40; ++n) {
    const BigRat expect = BigRat(n + 2) * pow2_rat(n - 1);
    ASSERT_EQ(table.at(2, n), ring.lift(expect)) << "n=" << n;
  }
}

TEST(MomDp, JensenLowerBound) {
  std::vector<BetaSq> betas{BetaSq(BigFloat::parse("0.1")), BetaSq(BigFloat::parse("0.3")), BetaSq(q(1, 2)),
                            BetaSq(1L), BetaSq(BigFloat::parse("1.7"))};
  for (const auto& b : betas) {
    const AnyRing ring = make_ring(b);
    for (int k = 1; k <= 5; ++k) {
      for (long n = 0; n <= 20; ++n) {
        const BigFloat value = scalar_to_float(mom_dp(k, n, ring));
        const BigFloat bound = pow(exp2(b.to_float() * BigFloat(n)), k);
        // Equality at k = 1 and n = 0; allow the float ring its rounding.
        ASSERT_GE(value * (BigFloat(1L) + BigFloat(1e-60)), bound) << b.to_string() << " k=" << k << " n=" << n;
      }
    }
  }
}

TEST(MomDp, TableExtendsIncrementally) {
  engine::MomentTable<RationalRing> table(RationalRing(1), 3);
  EXPECT_EQ(table.n_max(), 0);
  const BigRat at5 = table.at(3, 5);
  EXPECT_EQ(table.n_max(), 5);
  EXPECT_EQ(table.at(3, 2), mom_dp(RationalRing(1), 3, 2));
  EXPECT_EQ(at5, mom_dp(RationalRing(1), 3, 5));
  EXPECT_EQ(table.at(1, 4), q(16));
  EXPECT_THROW(table.at(4, 1), std::out_of_range);
}

TEST(MomSymbolic, SmallK) {
  const GenPoly& g1 = engine::mom_symbolic(1);
  ASSERT_EQ(g1.size(), 1u);
  EXPECT_EQ(g1.coefficient({1, 0}), RatFun(1L));

  const Poly t = Poly::monomial(1, 1);
  const Poly t2m2 = t * t - Poly(2L);
  const GenPoly& g2 = engine::mom_symbolic(2);
  ASSERT_EQ(g2.size(), 2u);
  EXPECT_EQ(g2.coefficient({4, -1}), RatFun(t * t - Poly(1L), t2m2));
  EXPECT_EQ(g2.coefficient({2, 0}), RatFun(Poly(-1L), t2m2));
}

TEST(MomSymbolic, ValueAtDepthZeroIsOne) {
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(engine::mom_symbolic(k).at_zero(), RatFun(1L)) << k;
}

TEST(MomSymbolic, ExactAgreementAtIntegerBeta) {
  for (long b2 : {1L, 2L}) {
    const RationalRing ring(b2);
    for (int k = 1; k <= 5; ++k) {
      for (long n = 0; n <= 6; ++n) {
        ASSERT_EQ(engine::evaluate_genpoly(ring, engine::mom_symbolic(k), n), mom_dp(ring, k, n));
      }
    }
  }
}

TEST(MomSymbolic, AgreesWithDpAtGenericBeta) {
  for (const char* b : {"0.1", "0.3", "0.9", "1.7"}) {
    const FloatRing ring(BigFloat::parse(b), 256);
    engine::MomentTable<FloatRing> table(ring, 5);
    for (int k = 1; k <= 5; ++k) {
      for (long n = 0; n <= 12; ++n) {
        const BigFloat sym = engine::evaluate_genpoly(ring, engine::mom_symbolic(k), n);
        ASSERT_LT(relative_error(sym, table.at(k, n)), BigFloat(1e-10)) << b << " k=" << k << " n=" << n;
      }
    }
  }
}

TEST(MomSymbolic, PoleAtCriticalBeta) {
  EXPECT_THROW(engine::evaluate_genpoly(RadicalRing(1, 2), engine::mom_symbolic(2), 3), PoleAtCriticalBeta);
  // Within 2^{-128} of 1/2 the float ring refuses as well.
  const FloatRing near(BigFloat(q(1, 2)) + exp2(BigFloat(-200L)), 256);
  EXPECT_THROW(engine::evaluate_genpoly(near, engine::mom_symbolic(2), 3), PoleAtCriticalBeta);
  const Scalar v = engine::evaluate_genpoly(engine::mom_symbolic(2), make_ring(BetaSq(1L)), 1);
  EXPECT_EQ(std::get<BigRat>(v), q(10));
}

TEST(MomPolynomial, Examples) {
  const auto p21 = engine::mom_polynomial(2, 1);
  EXPECT_EQ(p21.coefficients, (std::map<long, BigRat>{{2, q(-1, 2)}, {3, q(3, 2)}}));
  const auto p13 = engine::mom_polynomial(1, 3);
  EXPECT_EQ(p13.coefficients, (std::map<long, BigRat>{{9, q(1)}}));
  const auto p31 = engine::mom_polynomial(3, 1);
  for (long n = 0; n <= 7; ++n) EXPECT_EQ(p31.evaluate_at_depth(n), mom_dp(RationalRing(1), 3, n));
}

TEST(MomPolynomial, DegreeLawAndPositiveLeadingCoefficient) {
  for (int k = 1; k <= 4; ++k) {
    for (long beta = 1; beta <= 2; ++beta) {
      const auto p = engine::mom_polynomial(k, beta);
      EXPECT_EQ(p.degree(), k * k * beta * beta - k + 1) << k << " " << beta;
      EXPECT_GT(p.leading(), 0);
      EXPECT_FALSE(p.used_fallback);
    }
  }
}

TEST(MomPolynomial, InterpolationRouteAgrees) {
  for (int k = 1; k <= 3; ++k) {
    for (long beta = 1; beta <= 2; ++beta) {
      const auto sym = engine::mom_polynomial(k, beta);
      const auto interp = engine::interpolate_mom_polynomial(k, beta);
      EXPECT_EQ(sym.coefficients, interp.coefficients) << k << " " << beta;
    }
  }
}

TEST(MomPolynomial, NoResonanceForSmallParameters) {
  for (int k = 1; k <= 5; ++k) {
    for (long beta = 1; beta <= 3; ++beta) {
      const auto p = engine::mom_polynomial(k, beta);
      EXPECT_FALSE(p.used_fallback) << "resonance at k=" << k << " beta=" << beta;
      EXPECT_EQ(p.evaluate_at_depth(3), mom_dp(RationalRing(beta * beta), k, 3));
    }
  }
}
