#pragma once

#include <optional>
#include <string>

#include "cli_support.hpp"

namespace mom::cli {

struct CommonFlags {
  std::string format = "json";
  long precision = 0;  // 0 = MOM_PRECISION or 256
};

struct MomFlags {
  int k = 0;
  long n = 0;
  std::optional<std::string> beta;
  std::optional<std::string> beta_sq;
  std::string ring = "auto";
  std::string method = "dp";
  int budget = 16;
};

struct PolyFlags {
  int k = 0;
  long beta = 0;
};

struct AsymFlags {
  int k = 0;
  std::optional<std::string> beta;
  std::optional<std::string> beta_sq;
  std::string ring = "auto";
};

struct SweepFlags {
  int k = 0;
  std::string beta_min = "0.05";
  std::string beta_max = "2";
  long steps = 101;
  std::optional<std::string> out;
};

struct McFlags {
  int k = 0;
  long n = 0;
  std::string beta;
  long trials = 100000;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  bool force = false;
};

struct VerifyFlags {
  std::string suite;
  int budget = 16;
  std::uint64_t seed = 42;
  long trials = 100000;
};

mpfr_prec_t resolve_precision(const CommonFlags& common);

int run_mom(const MomFlags& f, const CommonFlags& common);
int run_poly(const PolyFlags& f, const CommonFlags& common);
int run_asym(const AsymFlags& f, const CommonFlags& common);
int run_sweep(const SweepFlags& f, const CommonFlags& common);
int run_mc(const McFlags& f, const CommonFlags& common);
int run_verify(const VerifyFlags& f, const CommonFlags& common);

}  // namespace mom::cli
