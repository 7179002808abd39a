#include <gtest/gtest.h>

#include <random>

#include "mom/engine/mom.hpp"
#include "mom/numeric/geometric.hpp"
#include "mom/numeric/genpoly.hpp"
#include "mom/numeric/radical.hpp"
#include "mom/numeric/ring.hpp"

using namespace mom;
using namespace mom::numeric;

namespace {

BigRat q(long n, long d = 1) { return make_rational(n, d); }

Radical rad(std::initializer_list<BigRat> c) { return Radical(static_cast<int>(c.size()), std::vector<BigRat>(c)); }

Poly random_poly(std::mt19937& gen, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::vector<BigRat> c(static_cast<std::size_t>(deg(gen) + 1));
  for (auto& v : c) v = q(coef(gen), 1 + std::abs(coef(gen)));
  return Poly(std::move(c));
}

}  // namespace

TEST(BigRat, CanonicalFormAndParsing) {
  EXPECT_EQ(to_fraction_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_fraction_string(BigRat(10)), "10/1");
  EXPECT_EQ(parse_rational("-9/6"), q(-3, 2));
  EXPECT_EQ(parse_rational("+7"), q(7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_EQ(pow2_rat(-3), q(1, 8));
  EXPECT_EQ(BigRat(binomial(5, 2)), q(10));
}

TEST(BigFloat, PrecisionAndRounding) {
  BigFloat a = BigFloat::parse("0.1", 256);
  EXPECT_EQ(a.precision(), 256);
  EXPECT_NE(a, BigFloat(0.1, 256));
  EXPECT_THROW(BigFloat::parse("0.1x"), std::invalid_argument);
  EXPECT_THROW(BigFloat(1.0, 32), std::invalid_argument);
  BigFloat third = BigFloat(1L, 128) / BigFloat(3L, 128);
  EXPECT_EQ((third * BigFloat(1L, 512)).precision(), 512);
  EXPECT_LT(relative_error(exp2(BigFloat(q(1, 2))) * exp2(BigFloat(q(1, 2))), BigFloat(2L)),
            BigFloat(1e-70));
}

TEST(Radical, MultiplicationExamples) {
  EXPECT_EQ(radical_mul(rad({0, 1}), rad({0, 1})), rad({2, 0}));
  EXPECT_EQ(radical_mul(rad({q(3, 2)}), rad({4})), rad({6}));
  EXPECT_EQ(radical_mul(rad({0, 1, 0}), rad({0, 0, 1})), rad({2, 0, 0}));
  EXPECT_THROW(radical_mul(rad({0, 1}), rad({0, 1, 0})), RingMismatch);
  EXPECT_THROW(rad({1, 2}) + rad({1}), RingMismatch);
}

TEST(Radical, RootPowerReducesToTwo) {
  for (int m = 1; m <= 8; ++m) {
    Radical r = Radical::constant(m, 1);
    for (int i = 0; i < m; ++i) r = radical_mul(r, Radical::root_power(m, 1));
    EXPECT_EQ(r, Radical::constant(m, 2)) << "m=" << m;
    EXPECT_EQ(Radical::root_power(m, -m), Radical::constant(m, q(1, 2)));
    EXPECT_EQ(Radical::root_power(m, 3 * m + 1), radical_mul(Radical::constant(m, 8), Radical::root_power(m, 1)));
  }
}

TEST(Radical, InverseProperty) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int m = 1; m <= 6; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<BigRat> c(static_cast<std::size_t>(m));
      for (auto& v : c) v = q(coef(gen), 1 + std::abs(coef(gen)));
      Radical a(m, c);
      if (a.is_zero()) continue;
      EXPECT_EQ(a * a.inverse(), Radical::constant(m, 1));
      EXPECT_LT(relative_error((a / a).to_float(), BigFloat(1L)), BigFloat(1e-70));
    }
  }
  EXPECT_THROW(Radical::constant(3, 0).inverse(), std::domain_error);
}

TEST(Radical, FloatAndString) {
  const Radical r = rad({q(3, 2), q(1, 2)});
  EXPECT_EQ(r.to_string(), "3/2 + 1/2*2^(1/2)");
  EXPECT_EQ(Radical::constant(2, 8).to_string(), "8");
  EXPECT_NEAR(r.to_float().to_double(), 1.5 + 0.5 * std::sqrt(2.0), 1e-15);
}

TEST(Poly, DivmodAndGcd) {
  const Poly x = Poly::monomial(1, 1);
  const Poly a = (x - Poly(1L)) * (x + Poly(2L));
  const Poly b = (x - Poly(1L)) * (x * x + Poly(3L));
  EXPECT_EQ(gcd(a, b), x - Poly(1L));
  auto [quot, rem] = b.divmod(a);
  EXPECT_EQ(quot * a + rem, b);
  EXPECT_LT(rem.degree(), a.degree());
  EXPECT_THROW(a.divmod(Poly()), std::domain_error);
  EXPECT_EQ(a.to_string(), "t^2 + t - 2");
}

TEST(RatFun, NormalForm) {
  const Poly x = Poly::monomial(1, 1);
  const RatFun f(Poly(2L) * (x * x - Poly(1L)), Poly(4L) * (x - Poly(1L)));
  EXPECT_EQ(f.den(), Poly(1L));
  EXPECT_EQ(f.num(), (x + Poly(1L)) * BigRat(q(1, 2)));
  EXPECT_EQ(RatFun::t_power(-2, 3).to_string(), "(8)/(t^2)");
  EXPECT_THROW(RatFun(Poly(1L), Poly()), std::domain_error);
}

TEST(RatFun, ProductThenQuotientIsIdentity) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    Poly fn = random_poly(gen, 4), fd = random_poly(gen, 3), gn = random_poly(gen, 4), gd = random_poly(gen, 3);
    if (fd.is_zero() || gd.is_zero() || gn.is_zero()) continue;
    const RatFun f(fn, fd), g(gn, gd);
    EXPECT_EQ((f * g) / g, f);
    EXPECT_EQ((f + g) - g, f);
    EXPECT_EQ(f.den().leading(), 1);
  }
}

TEST(GenPoly, TermArithmetic) {
  GenPoly a = GenPoly::term({1, 0}, RatFun(2L));
  a.add_term({1, 0}, RatFun(-2L));
  EXPECT_TRUE(a.is_zero());
  const GenPoly b = GenPoly::term({1, 0}, RatFun(1L)) + GenPoly::term({0, 1}, RatFun(3L));
  const GenPoly sq = b * b;
  EXPECT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq.coefficient({1, 1}), RatFun(6L));
  EXPECT_EQ(sq.at_zero(), RatFun(16L));
  EXPECT_EQ(b.shifted({2, -1}).coefficient({3, -1}), RatFun(1L));
}

TEST(Ring, AutoSelection) {
  EXPECT_EQ(ring_name(make_ring(BetaSq(2L))), "rational");
  EXPECT_EQ(ring_name(make_ring(BetaSq(q(1, 3)))), "radical(3)");
  EXPECT_EQ(ring_name(make_ring(BetaSq::from_double(0.3))), "float");
  EXPECT_THROW(make_ring(BetaSq(q(1, 2)), RingKind::Rational), RingMismatch);
  EXPECT_THROW(make_ring(BetaSq::from_double(0.5), RingKind::Radical), RingMismatch);
  EXPECT_THROW(make_ring(BetaSq(-1L)), DomainError);
  EXPECT_EQ(ring_name(make_ring(BetaSq(2L), RingKind::Radical)), "radical(1)");
}

TEST(Ring, PoleThreshold) {
  const FloatRing r(BigFloat(0.5), 256);
  EXPECT_TRUE(r.is_pole(BigFloat(1e-40)));
  EXPECT_FALSE(r.is_pole(BigFloat(1e-30)));
}

TEST(Geometric, Examples) {
  const RationalRing r0(0);
  EXPECT_EQ(geometric_sum(r0, {0, 1}, 3), q(7));
  EXPECT_EQ(geometric_sum(r0, {0, 0}, 5), q(5));
  EXPECT_THROW(geometric_sum(ExpPair{0, 0}), DegenerateExponent);
  EXPECT_EQ(weighted_geometric_sum(r0, {0, 1}, 0, 4), q(15));
  EXPECT_EQ(weighted_geometric_sum(r0, {0, 1}, 1, 3), q(4));
  EXPECT_EQ(weighted_geometric_sum(r0, {0, 0}, 1, 4), q(6));
  EXPECT_THROW(weighted_geometric_sum(r0, {0, 1}, 3, 4), std::invalid_argument);
}

TEST(Geometric, SymbolicInnerSumMatchesKnownForm) {
  // sum_lambda 2^{(2b-1) lambda} = (2^{(2b-1)n} - 1) / (2^{2b-1} - 1)
  const GenPoly g = geometric_sum(ExpPair{2, -1});
  const Poly t = Poly::monomial(1, 1);
  const RatFun expect = RatFun(Poly(2L), t * t - Poly(2L));
  EXPECT_EQ(g.coefficient({2, -1}), expect);
  EXPECT_EQ(g.coefficient({0, 0}), -expect);
}

namespace {

template <class Ring>
typename Ring::value_type direct(const Ring& ring, ExpPair a, int s, long n) {
  auto sum = ring.zero();
  for (long lambda = 0; lambda < n; ++lambda) {
    BigRat w(1);
    for (int i = 0; i < s; ++i) w *= (n - lambda - 1);
    auto term = ring.lift(w);
    for (long i = 0; i < lambda; ++i) term = term * ring.pow2(a);
    sum = sum + term;
  }
  return sum;
}

template <class Ring>
void check_weighted(const Ring& ring) {
  for (int s = 0; s <= 2; ++s) {
    for (long p = -6; p <= 6; ++p) {
      for (long qq = -6; qq <= 6; ++qq) {
        for (long n = 0; n <= 20; ++n) {
          const ExpPair a{p, qq};
          const auto got = weighted_geometric_sum(ring, a, s, n);
          const auto want = direct(ring, a, s, n);
          if constexpr (Ring::exact) {
            ASSERT_TRUE(got == want) << ring.name() << " s=" << s << " a=" << a.to_string() << " n=" << n;
          } else {
            ASSERT_LT(relative_error(got, want), BigFloat(1e-40))
                << "s=" << s << " a=" << a.to_string() << " n=" << n;
          }
        }
      }
    }
  }
}

}  // namespace

TEST(Geometric, WeightedSumExhaustiveRational) { check_weighted(RationalRing(1)); }
TEST(Geometric, WeightedSumExhaustiveRadical) { check_weighted(RadicalRing(1, 2)); }
TEST(Geometric, WeightedSumExhaustiveFloat) { check_weighted(FloatRing(BigFloat::parse("0.37"), 256)); }

TEST(Geometric, ClosedFormMatchesDirectSummation) {
  const FloatRing fr(BigFloat::parse("0.37"), 256);
  for (long beta_sq : {1L, 2L}) {
    const RationalRing rr(beta_sq);
    for (long p = -6; p <= 6; ++p) {
      for (long qq = -6; qq <= 6; ++qq) {
        const ExpPair a{p, qq};
        if (a.is_zero()) continue;
        const GenPoly g = geometric_sum(a);
        for (long n = 0; n <= 20; ++n) {
          if (p * beta_sq + qq == 0) {
            EXPECT_THROW(engine::evaluate_genpoly(rr, g, n), PoleAtCriticalBeta);
          } else {
            ASSERT_EQ(engine::evaluate_genpoly(rr, g, n), direct(rr, a, 0, n));
          }
          if (beta_sq == 1) {
            ASSERT_LT(relative_error(engine::evaluate_genpoly(fr, g, n), direct(fr, a, 0, n)), BigFloat(1e-12));
          }
        }
      }
    }
  }
}
