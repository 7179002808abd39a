#include "commands.hpp"

#include <cmath>

#include "mom/asymptotics/coefficients.hpp"
#include "mom/engine/mom.hpp"
#include "mom/montecarlo/simulation.hpp"
#include "mom/oracle/bruteforce.hpp"

namespace mom::cli {

using asymptotics::RegimeTag;
using numeric::BetaSq;
using numeric::BigFloat;
using numeric::BigRat;
using numeric::Scalar;

mpfr_prec_t resolve_precision(const CommonFlags& common) {
  if (common.precision == 0) return default_precision();
  check_precision(common.precision);
  return common.precision;
}

namespace {

void require_k(int k) {
  if (k < 1) throw UsageError("--k must be at least 1");
}

Json beta_params(const BetaInput& b) {
  Json j;
  if (b.from_rational) {
    j["beta_sq_rational"] = b.text;
  } else {
    j["beta"] = b.text;
  }
  j["beta_sq"] = b.beta_sq.to_string();
  j["beta_sq_exact"] = b.beta_sq.is_exact();
  return j;
}

std::string ring_tag(const numeric::AnyRing& ring, mpfr_prec_t precision) {
  const std::string name = numeric::ring_name(ring);
  return name == "float" ? "float(" + std::to_string(precision) + ")" : name;
}

// p beta^2 + q as a decimal
std::string exponent_value(const numeric::ExpPair& e, const BetaSq& b, mpfr_prec_t precision,
                           int digits = kDecimalDigits) {
  const BigFloat v = b.to_float(precision) * BigFloat(e.p, precision) + BigFloat(e.q, precision);
  return v.to_string(digits);
}

Json exponent_json(const numeric::ExpPair& e, const BetaSq& b, mpfr_prec_t precision) {
  Json j;
  j["p"] = e.p;
  j["q"] = e.q;
  j["value"] = exponent_value(e, b, precision);
  return j;
}

}  // namespace

int run_mom(const MomFlags& f, const CommonFlags& common) {
  require_k(f.k);
  if (f.n < 0) throw UsageError("--n must be nonnegative");
  const mpfr_prec_t prec = resolve_precision(common);
  const BetaInput b = beta_from_flags(f.beta, f.beta_sq, prec);
  const numeric::AnyRing ring = numeric::make_ring(b.beta_sq, numeric::parse_ring_kind(f.ring), prec);

  Scalar value;
  std::string provenance = "engine";
  if (f.method == "dp") {
    value = engine::mom_dp(f.k, f.n, ring);
  } else if (f.method == "symbolic") {
    value = engine::evaluate_genpoly(engine::mom_symbolic(f.k), ring, f.n);
  } else if (f.method == "bruteforce") {
    if (f.n > 62) throw UsageError("--n too large for enumeration");
    oracle::BruteforceOptions opts;
    opts.budget = f.budget;
    value = oracle::mom_bruteforce(f.k, static_cast<int>(f.n), ring, opts);
    provenance = "oracle";
  } else {
    throw UsageError("unknown method: " + f.method);
  }

  Json params = beta_params(b);
  params["k"] = f.k;
  params["n"] = f.n;
  params["ring"] = f.ring;
  params["method"] = f.method;
  params["precision"] = prec;
  Output out = make_output("mom", std::move(params), provenance);
  out.record["result"]["ring"] = ring_tag(ring, prec);
  out.record["result"]["value"] = encode(value);
  out.header = {"k", "n", "beta_sq", "ring", "value", "decimal"};
  out.rows.push_back({std::to_string(f.k), std::to_string(f.n), b.beta_sq.to_string(), ring_tag(ring, prec),
                      numeric::scalar_to_string(value), decimal(value)});
  emit(out, common.format);
  return 0;
}

int run_poly(const PolyFlags& f, const CommonFlags& common) {
  require_k(f.k);
  if (f.beta < 1) throw UsageError("--beta must be a positive integer");
  const engine::MomPolynomial p = engine::mom_polynomial(f.k, f.beta);

  Json params;
  params["k"] = f.k;
  params["beta"] = f.beta;
  Output out = make_output("poly", std::move(params), "engine");
  Json rows = Json::array();
  out.header = {"degree", "coefficient"};
  for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) {
    Json row;
    row["degree"] = it->first;
    row["coefficient"] = numeric::to_fraction_string(it->second);
    rows.push_back(std::move(row));
    out.rows.push_back({std::to_string(it->first), numeric::to_fraction_string(it->second)});
  }
  Json& r = out.record["result"];
  r["variable"] = "X = 2^n";
  r["degree"] = p.degree();
  r["used_fallback"] = p.used_fallback;
  r["coefficients"] = std::move(rows);
  emit(out, common.format);
  return 0;
}

int run_asym(const AsymFlags& f, const CommonFlags& common) {
  require_k(f.k);
  const mpfr_prec_t prec = resolve_precision(common);
  const BetaInput b = beta_from_flags(f.beta, f.beta_sq, prec);
  const asymptotics::LeadingTerm lt =
      asymptotics::leading_term(f.k, b.beta_sq, numeric::parse_ring_kind(f.ring), prec);

  // Ratio estimates are approximations even when computed in an exact ring.
  const Json coefficient =
      lt.method == "numeric" ? encode_float(numeric::scalar_to_float(lt.coefficient, prec)) : encode(lt.coefficient);

  Json params = beta_params(b);
  params["k"] = f.k;
  params["ring"] = f.ring;
  params["precision"] = prec;
  Output out = make_output("asym", std::move(params), "engine");
  Json& r = out.record["result"];
  r["regime"] = asymptotics::regime_name(lt.regime.tag);
  r["exponent"] = exponent_json(lt.regime.exponent, b.beta_sq, prec);
  r["n_power"] = lt.regime.n_power;
  r["coefficient"] = coefficient;
  r["method"] = lt.method;
  r["error"] = lt.error ? Json(lt.error->to_string(6)) : Json(nullptr);

  out.header = {"k", "beta", "beta_sq", "regime", "exponent", "n_power", "coefficient", "method", "error"};
  out.rows.push_back({std::to_string(f.k), b.text, b.beta_sq.to_string(), asymptotics::regime_name(lt.regime.tag),
                      exponent_value(lt.regime.exponent, b.beta_sq, prec), std::to_string(lt.regime.n_power),
                      decimal(lt.coefficient), lt.method, lt.error ? lt.error->to_string(6) : ""});
  emit(out, common.format);
  return 0;
}

namespace {

struct SweepRow {
  BigFloat beta;
  BetaSq beta_sq;
  asymptotics::LeadingTerm term;
};

// Grid points within this distance of 1/m (m < k) sit on a removable
// singularity of the closed form and are evaluated exactly at 1/m.
const double kPoleTolerance = 1e-9;

SweepRow sweep_point(int k, const BigFloat& beta, mpfr_prec_t prec) {
  const BigFloat b2 = beta * beta;
  BetaSq beta_sq(b2);
  for (long m = 2; m < k; ++m) {
    const BigRat target = numeric::make_rational(1, m);
    if (abs(b2 - BigFloat(target, prec)) < BigFloat(kPoleTolerance, prec)) {
      beta_sq = BetaSq(target);
      break;
    }
  }
  return SweepRow{beta, beta_sq, asymptotics::leading_term(k, beta_sq, numeric::RingKind::Auto, prec)};
}

}  // namespace

int run_sweep(const SweepFlags& f, const CommonFlags& common) {
  require_k(f.k);
  if (f.steps < 2) throw UsageError("--steps must be at least 2");
  const mpfr_prec_t prec = resolve_precision(common);
  BigFloat lo, hi;
  try {
    lo = BigFloat::parse(f.beta_min, prec);
    hi = BigFloat::parse(f.beta_max, prec);
  } catch (const std::exception&) {
    throw UsageError("cannot parse --beta-min/--beta-max");
  }
  if (!(lo < hi)) throw UsageError("--beta-min must be below --beta-max");
  if (lo.sign() < 0) throw UsageError("--beta-min must be nonnegative");

  // The transition point 1/sqrt(k) always gets its own row.
  const BigFloat critical_beta = sqrt(BigFloat(numeric::make_rational(1, f.k), prec));
  const bool has_critical = !(critical_beta < lo) && !(hi < critical_beta);

  std::vector<SweepRow> rows;
  const BigFloat step = (hi - lo) / BigFloat(f.steps - 1, prec);
  bool critical_done = false;
  for (long i = 0; i < f.steps; ++i) {
    const BigFloat beta = i == f.steps - 1 ? hi : lo + step * BigFloat(i, prec);
    if (has_critical && !critical_done && !(beta < critical_beta)) {
      critical_done = true;
      rows.push_back(SweepRow{critical_beta, BetaSq(numeric::make_rational(1, f.k)),
                              asymptotics::leading_term(f.k, BetaSq(numeric::make_rational(1, f.k)),
                                                        numeric::RingKind::Auto, prec)});
      if (asymptotics::classify_regime(f.k, BetaSq(BigFloat(beta * beta))).tag == RegimeTag::Critical) continue;
    }
    rows.push_back(sweep_point(f.k, beta, prec));
  }

  Json params;
  params["k"] = f.k;
  params["beta_min"] = f.beta_min;
  params["beta_max"] = f.beta_max;
  params["steps"] = f.steps;
  params["precision"] = prec;
  Output out = make_output("sweep", std::move(params), "engine");
  out.header = {"beta", "regime", "coefficient", "beta_sq", "exponent", "n_power", "method"};
  Json jrows = Json::array();
  for (const auto& row : rows) {
    const std::string regime = asymptotics::regime_short_name(row.term.regime.tag);
    std::vector<std::string> cells{row.beta.to_string(17),
                                   regime,
                                   decimal(row.term.coefficient, 17),
                                   row.beta_sq.to_float(prec).to_string(17),
                                   exponent_value(row.term.regime.exponent, row.beta_sq, prec, 17),
                                   std::to_string(row.term.regime.n_power),
                                   row.term.method};
    Json j;
    for (std::size_t c = 0; c < cells.size(); ++c) j[out.header[c]] = cells[c];
    jrows.push_back(std::move(j));
    out.rows.push_back(std::move(cells));
  }
  Json& r = out.record["result"];
  r["transition_beta"] = critical_beta.to_string(17);
  r["row_count"] = rows.size();
  if (f.out) {
    write_file(*f.out, render_csv(out.header, out.rows));
    r["out"] = *f.out;
    if (common.format == "json") emit(out, "json");
  } else {
    r["rows"] = std::move(jrows);
    emit(out, common.format);
  }
  return 0;
}

int run_mc(const McFlags& f, const CommonFlags& common) {
  require_k(f.k);
  if (f.n < 0 || f.n > 30) throw UsageError("--n must be in 0..30");
  if (f.trials < 1) throw UsageError("--trials must be positive");
  const mpfr_prec_t prec = resolve_precision(common);
  const BetaInput b = parse_beta(f.beta, prec);
  if (!f.force && asymptotics::classify_regime(f.k, b.beta_sq).tag == RegimeTag::SuperCritical) {
    throw HeavyTailRefusal("k beta^2 > 1: the estimator has no usable error bar here; pass --force to run anyway");
  }

  montecarlo::SimConfig config;
  config.n = f.n;
  config.beta = b.beta.to_double();
  config.trials = f.trials;
  config.seed = f.seed;
  config.precision = prec;
  config.threads = f.threads;
  const montecarlo::MomentEstimate est = montecarlo::estimate_mom(config, f.k);
  const Scalar exact = engine::mom_dp(f.k, f.n, b.beta_sq, numeric::RingKind::Auto, prec);
  const double exact_d = numeric::scalar_to_float(exact).to_double();

  Json z = nullptr;
  std::string z_text;
  if (est.std_error > 0) {
    const double zv = (est.mean - exact_d) / est.std_error;
    z = encode_double(zv);
    z_text = decimal(zv);
  } else if (est.mean == exact_d) {
    z = encode_double(0.0);
    z_text = "0";
  }

  Json params;
  params["k"] = f.k;
  params["n"] = f.n;
  params["beta"] = f.beta;
  params["trials"] = f.trials;
  params["seed"] = f.seed;
  params["force"] = f.force;
  params["precision"] = prec;
  Output out = make_output("mc", std::move(params), "montecarlo");
  Json& r = out.record["result"];
  r["mean"] = encode_double(est.mean);
  r["std_error"] = encode_double(est.std_error);
  r["exact"] = encode(exact);
  r["z_score"] = z;
  r["heavy_tail_warning"] = est.heavy_tail_warning;
  out.header = {"k", "n", "beta", "trials", "seed", "mean", "std_error", "exact", "z_score", "heavy_tail_warning"};
  out.rows.push_back({std::to_string(f.k), std::to_string(f.n), f.beta, std::to_string(f.trials),
                      std::to_string(f.seed), decimal(est.mean), decimal(est.std_error), decimal(exact, 17), z_text,
                      est.heavy_tail_warning ? "true" : "false"});
  emit(out, common.format);
  return 0;
}

}  // namespace mom::cli
