#include "mom/asymptotics/coefficients.hpp"

namespace mom::asymptotics {

using numeric::RadicalRing;

Scalar rho(int k, const BetaSq& beta_sq, RingKind kind, mpfr_prec_t precision) {
  const AnyRing ring = numeric::make_ring(beta_sq, kind, precision);
  return std::visit([k](const auto& r) -> Scalar { return rho(r, k); }, ring);
}

Scalar tau(int k, const BetaSq& beta_sq, RingKind kind, mpfr_prec_t precision) {
  const AnyRing ring = numeric::make_ring(beta_sq, kind, precision);
  return std::visit([k](const auto& r) -> Scalar { return tau(r, k); }, ring);
}

numeric::Radical sigma(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const RadicalRing ring(1, k);
  if (k == 1) return ring.one();
  const auto rho = rho_table(ring, k - 1);
  const long kk = k;
  auto sum = ring.zero();
  for (long j = 1; j < kk; ++j) {
    const BigRat binom(numeric::binomial(static_cast<unsigned long>(kk), static_cast<unsigned long>(j)));
    // 2^{(2j/k)(j-k)} = (2^{1/k})^{2j(j-k)}
    sum = sum + ring.lift(binom) * ring.pow2(ExpPair{2 * j * (j - kk), 0}) * rho[static_cast<std::size_t>(j)] *
                    rho[static_cast<std::size_t>(kk - j)];
  }
  return sum * ring.lift(BigRat(1, 2));
}

Regime growth_law(int k, const BetaSq& beta_sq) {
  if (k == 1) return Regime{classify_regime(1, beta_sq).tag, ExpPair{1, 0}, 0};
  return classify_regime(k, beta_sq);
}

NumericCoefficient leading_coefficient_numeric(int k, const AnyRing& ring, long n_lo, long n_hi) {
  if (n_lo < 1 || n_hi <= n_lo) throw std::invalid_argument("need n_hi > n_lo >= 1");
  return std::visit(
      [&](const auto& r) -> NumericCoefficient {
        using R = std::decay_t<decltype(r)>;
        const Regime law = growth_law(k, r.beta_sq_value());
        engine::MomentTable<R> table(r, k);
        auto hi = growth_ratio(r, table, law, n_hi);
        auto lo = growth_ratio(r, table, law, n_lo);
        mpfr_prec_t prec = numeric::kDefaultPrecision;
        if constexpr (std::is_same_v<R, numeric::FloatRing>) prec = r.precision();
        BigFloat err = abs(r.to_float(hi, prec) - r.to_float(lo, prec));
        return NumericCoefficient{Scalar(std::move(hi)), std::move(err), Scalar(std::move(lo))};
      },
      ring);
}

NumericCoefficient leading_coefficient_numeric(int k, const BetaSq& beta_sq, long n_lo, long n_hi, RingKind kind,
                                               mpfr_prec_t precision) {
  return leading_coefficient_numeric(k, numeric::make_ring(beta_sq, kind, precision), n_lo, n_hi);
}

long unit_fraction_index(const BetaSq& beta_sq) {
  if (!beta_sq.is_exact()) return 0;
  const BigRat& r = beta_sq.exact();
  if (r.get_num() != 1 || !r.get_den().fits_slong_p()) return 0;
  return r.get_den().get_si();
}

LeadingTerm leading_term(int k, const BetaSq& beta_sq, RingKind kind, mpfr_prec_t precision) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const Regime regime = classify_regime(k, beta_sq);
  if (k == 1) {
    return LeadingTerm{growth_law(1, beta_sq), Scalar(BigRat(1)), "exact", std::nullopt};
  }
  switch (regime.tag) {
    case RegimeTag::SubCritical:
      return LeadingTerm{regime, rho(k, beta_sq, kind, precision), "rho", std::nullopt};
    case RegimeTag::Critical:
      return LeadingTerm{regime, Scalar(sigma(k)), "sigma", std::nullopt};
    case RegimeTag::SuperCritical:
      break;
  }
  const long m = unit_fraction_index(beta_sq);
  if (m > 1 && m < k) {
    NumericCoefficient est =
        leading_coefficient_numeric(k, AnyRing(RadicalRing(1, m)), kNumericLo, kNumericHi);
    return LeadingTerm{regime, std::move(est.value), "numeric", std::move(est.error)};
  }
  return LeadingTerm{regime, tau(k, beta_sq, kind, precision), "tau", std::nullopt};
}

}  // namespace mom::asymptotics
