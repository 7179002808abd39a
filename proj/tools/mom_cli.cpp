#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mom/errors.hpp"

using namespace mom::cli;

namespace {

void add_common(CLI::App* cmd, CommonFlags& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--precision", common.precision, "Float precision in bits (default $MOM_PRECISION or 256)");
}

void add_beta(CLI::App* cmd, std::optional<std::string>& beta, std::optional<std::string>& beta_sq) {
  auto* b = cmd->add_option("--beta", beta, "Inverse temperature (integer or decimal)");
  auto* r = cmd->add_option("--beta-sq-rational", beta_sq, "Exact beta^2 as p/m");
  b->excludes(r);
  r->excludes(b);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moments of moments of a branching random walk partition function"};
  app.require_subcommand(1);
  CommonFlags common;

  MomFlags mom_flags;
  auto* mom = app.add_subcommand("mom", "MoM_n(k, beta) from the recursion");
  mom->add_option("--k", mom_flags.k, "Moment order")->required();
  mom->add_option("--n", mom_flags.n, "Tree depth")->required();
  add_beta(mom, mom_flags.beta, mom_flags.beta_sq);
  mom->add_option("--ring", mom_flags.ring, "Arithmetic")->check(CLI::IsMember({"auto", "rational", "radical", "float"}));
  mom->add_option("--method", mom_flags.method, "dp, symbolic or bruteforce")
      ->check(CLI::IsMember({"dp", "symbolic", "bruteforce"}));
  mom->add_option("--budget", mom_flags.budget, "Max k*n for bruteforce");
  add_common(mom, common);

  PolyFlags poly_flags;
  auto* poly = app.add_subcommand("poly", "Exact polynomial in 2^n for integer beta");
  poly->add_option("--k", poly_flags.k, "Moment order")->required();
  poly->add_option("--beta", poly_flags.beta, "Positive integer beta")->required();
  add_common(poly, common);

  AsymFlags asym_flags;
  auto* asym = app.add_subcommand("asym", "Regime and leading-order term");
  asym->add_option("--k", asym_flags.k, "Moment order")->required();
  add_beta(asym, asym_flags.beta, asym_flags.beta_sq);
  asym->add_option("--ring", asym_flags.ring, "Arithmetic")
      ->check(CLI::IsMember({"auto", "rational", "radical", "float"}));
  add_common(asym, common);

  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Leading coefficient over a beta grid");
  sweep->add_option("--k", sweep_flags.k, "Moment order")->required();
  sweep->add_option("--beta-min", sweep_flags.beta_min, "Grid start");
  sweep->add_option("--beta-max", sweep_flags.beta_max, "Grid end");
  sweep->add_option("--steps", sweep_flags.steps, "Grid points");
  sweep->add_option("--out", sweep_flags.out, "CSV file to write");
  add_common(sweep, common);

  McFlags mc_flags;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate against the exact value");
  mc->add_option("--k", mc_flags.k, "Moment order")->required();
  mc->add_option("--n", mc_flags.n, "Tree depth")->required();
  mc->add_option("--beta", mc_flags.beta, "Inverse temperature")->required();
  mc->add_option("--trials", mc_flags.trials, "Independent replicates");
  mc->add_option("--seed", mc_flags.seed, "Generator key");
  mc->add_option("--threads", mc_flags.threads, "Worker threads (0 = all cores)");
  mc->add_flag("--force", mc_flags.force, "Run even when k beta^2 > 1");
  add_common(mc, common);

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "Cross-check suites");
  verify->add_option("--suite", verify_flags.suite, "oracle, mc, appendix or rmt")
      ->required()
      ->check(CLI::IsMember({"oracle", "mc", "appendix", "rmt"}));
  verify->add_option("--budget", verify_flags.budget, "Max k*n enumerated by the oracle suite");
  verify->add_option("--seed", verify_flags.seed, "Seed for the mc suite");
  verify->add_option("--trials", verify_flags.trials, "Trials for the mc suite");
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*mom) return run_mom(mom_flags, common);
    if (*poly) return run_poly(poly_flags, common);
    if (*asym) return run_asym(asym_flags, common);
    if (*sweep) return run_sweep(sweep_flags, common);
    if (*mc) return run_mc(mc_flags, common);
    if (*verify) return run_verify(verify_flags, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mom::RingMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRing;
  } catch (const mom::PoleAtCriticalBeta& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRing;
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOutput;
  } catch (const HeavyTailRefusal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHeavyTail;
  } catch (const mom::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mom::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mom::RegimeViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
