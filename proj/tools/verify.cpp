#include <cmath>
#include <cstdio>

#include "commands.hpp"
#include "mom/asymptotics/appendix.hpp"
#include "mom/asymptotics/coefficients.hpp"
#include "mom/engine/mom.hpp"
#include "mom/montecarlo/simulation.hpp"
#include "mom/oracle/bruteforce.hpp"
#include "mom/rmt/unitary.hpp"

namespace mom::cli {

using asymptotics::RegimeTag;
using numeric::BetaSq;
using numeric::BigFloat;
using numeric::BigRat;
using numeric::Scalar;

namespace {

struct Check {
  std::string name;
  std::string value;
  std::string reference;
  std::string tolerance;
  bool pass = false;
};

constexpr int kDigits = 20;

std::string tolerance_text(double tol) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%g", tol);
  return buf;
}

Check relative_check(std::string name, const BigFloat& value, const BigFloat& reference, double tol) {
  const BigFloat err = numeric::relative_error(value, reference);
  return Check{std::move(name), value.to_string(kDigits), reference.to_string(kDigits), tolerance_text(tol),
               err.is_finite() && err < BigFloat(tol)};
}

std::vector<Check> oracle_suite(int budget, mpfr_prec_t prec) {
  std::vector<Check> out;
  oracle::BruteforceOptions opts;
  opts.budget = budget;
  for (long b2 : {1L, 4L}) {
    const numeric::RationalRing ring(b2);
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= 4 && k * n <= budget; ++n) {
        const BigRat dp = engine::mom_dp(ring, k, n);
        const BigRat bf = oracle::mom_bruteforce(ring, k, n, opts);
        out.push_back(Check{"k=" + std::to_string(k) + " n=" + std::to_string(n) + " beta^2=" + std::to_string(b2),
                            numeric::to_fraction_string(dp), numeric::to_fraction_string(bf), "exact", dp == bf});
      }
    }
  }
  for (const char* b2 : {"0.09", "0.81"}) {
    const numeric::FloatRing ring(BigFloat::parse(b2, prec), prec);
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= 4 && k * n <= budget; ++n) {
        out.push_back(relative_check("k=" + std::to_string(k) + " n=" + std::to_string(n) + " beta^2=" + b2,
                                     engine::mom_dp(ring, k, n), oracle::mom_bruteforce(ring, k, n, opts), 1e-10));
      }
    }
  }
  return out;
}

std::vector<Check> mc_suite(std::uint64_t seed, long trials) {
  std::vector<Check> out;
  for (int k : {1, 2}) {
    montecarlo::SimConfig config;
    config.n = 6;
    config.beta = 0.3;
    config.trials = trials;
    config.seed = seed;
    const montecarlo::MomentEstimate est = montecarlo::estimate_mom(config, k);
    const double exact =
        numeric::scalar_to_float(engine::mom_dp(k, 6, BetaSq(BigFloat::parse("0.09")))).to_double();
    const double z = (est.mean - exact) / est.std_error;
    out.push_back(Check{"k=" + std::to_string(k) + " n=6 beta=0.3 z-score", decimal(z), decimal(exact), "|z|<=3",
                        std::abs(z) <= 3.0});
  }
  return out;
}

std::vector<Check> appendix_suite(mpfr_prec_t prec) {
  std::vector<Check> out;
  for (int k = 2; k <= 5; ++k) {
    for (const char* b : {"0.25", "0.45", "0.8", "1.0"}) {
      const BigFloat beta = BigFloat::parse(b, prec);
      const BetaSq bs(BigFloat(beta * beta));
      const RegimeTag tag = asymptotics::classify_regime(k, bs).tag;
      if (!asymptotics::appendix_supports(k, tag)) continue;
      const bool sub = tag == RegimeTag::SubCritical;
      const BigFloat ours = numeric::scalar_to_float(
          sub ? asymptotics::rho(k, bs, numeric::RingKind::Float, prec)
              : asymptotics::tau(k, bs, numeric::RingKind::Float, prec),
          prec);
      out.push_back(relative_check(std::string(sub ? "rho" : "tau") + " k=" + std::to_string(k) + " beta=" + b, ours,
                                   asymptotics::appendix_coefficient(k, bs, tag, prec), 1e-12));
    }
  }
  for (int k : {2, 3}) {
    const BetaSq bs(numeric::make_rational(1, k));
    out.push_back(relative_check("sigma k=" + std::to_string(k), asymptotics::sigma(k).to_float(prec),
                                 asymptotics::appendix_coefficient(k, bs, RegimeTag::Critical, prec), 1e-12));
  }
  return out;
}

std::vector<Check> rmt_suite(mpfr_prec_t prec) {
  std::vector<Check> out;
  for (long beta = 1; beta <= 4; ++beta) {
    BigFloat worst(0L, prec);
    for (long N = 1; N <= 50; ++N) {
      const BigFloat exact(rmt::unitary_mom_k1_integer(N, beta), prec);
      const BigFloat err = numeric::relative_error(rmt::unitary_mom_k1(N, static_cast<double>(beta), prec), exact);
      if (worst < err) worst = err;
    }
    out.push_back(Check{"gamma vs integer product, beta=" + std::to_string(beta) + ", N<=50 (max rel. error)",
                        worst.to_string(6), "0", "1e-12", worst < BigFloat(1e-12)});
  }
  long first_bad = -1;
  for (long N = 0; N <= 10000 && first_bad < 0; ++N) {
    if (rmt::unitary_mom_k1_integer(N, 1) != BigRat(N + 1)) first_bad = N;
  }
  out.push_back(Check{"integer product at beta=1 equals N+1 for N<=10000",
                      first_bad < 0 ? "all equal" : "fails at N=" + std::to_string(first_bad), "N+1", "exact",
                      first_bad < 0});
  for (double beta : {0.5, 1.0, 1.5}) {
    const BigFloat lo = log(rmt::unitary_mom_k1(1000, beta, prec));
    const BigFloat hi = log(rmt::unitary_mom_k1(10000, beta, prec));
    const double slope = ((hi - lo) / log(BigFloat(10L, prec))).to_double();
    out.push_back(Check{"log slope N=1e3..1e4, beta=" + decimal(beta), decimal(slope), decimal(beta * beta), "2%",
                        std::abs(slope - beta * beta) <= 0.02 * beta * beta});
  }
  const std::vector<std::pair<int, BetaSq>> cases{
      {1, BetaSq(BigFloat::parse("0.49", prec))}, {2, BetaSq(1L)}, {3, BetaSq(numeric::make_rational(1, 3))}};
  for (const auto& [k, b] : cases) {
    const rmt::GrowthComparison g = rmt::growth_exponent_compare(k, b);
    out.push_back(Check{"growth exponents agree, k=" + std::to_string(k) + " beta^2=" + b.to_string(),
                        decimal(g.brw_exponent), decimal(g.rmt_exponent), "flag", g.agree});
  }
  return out;
}

}  // namespace

int run_verify(const VerifyFlags& f, const CommonFlags& common) {
  const mpfr_prec_t prec = resolve_precision(common);
  std::vector<Check> checks;
  std::string provenance;
  if (f.suite == "oracle") {
    if (f.budget < 1 || f.budget > oracle::kHardBudget) throw UsageError("--budget out of range");
    checks = oracle_suite(f.budget, prec);
    provenance = "oracle";
  } else if (f.suite == "mc") {
    if (f.trials < 2) throw UsageError("--trials must be at least 2");
    checks = mc_suite(f.seed, f.trials);
    provenance = "montecarlo";
  } else if (f.suite == "appendix") {
    checks = appendix_suite(prec);
    provenance = "appendix-fixture";
  } else if (f.suite == "rmt") {
    checks = rmt_suite(prec);
    provenance = "rmt";
  } else {
    throw UsageError("unknown suite: " + f.suite);
  }

  Json params;
  params["suite"] = f.suite;
  if (f.suite == "oracle") params["budget"] = f.budget;
  if (f.suite == "mc") {
    params["seed"] = f.seed;
    params["trials"] = f.trials;
  }
  params["precision"] = prec;
  Output out = make_output("verify", std::move(params), provenance);
  out.header = {"check", "value", "reference", "tolerance", "pass"};
  Json list = Json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    Json j;
    j["check"] = c.name;
    j["value"] = c.value;
    j["reference"] = c.reference;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    list.push_back(std::move(j));
    out.rows.push_back({c.name, c.value, c.reference, c.tolerance, c.pass ? "true" : "false"});
    if (!c.pass) ++failed;
  }
  Json& r = out.record["result"];
  r["passed"] = failed == 0;
  r["failed_count"] = failed;
  r["checks"] = std::move(list);
  emit(out, common.format);
  return failed == 0 ? 0 : kExitFailure;
}

}  // namespace mom::cli
