#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mom/numeric/ring.hpp"

namespace mom::cli {

using Json = nlohmann::ordered_json;

// Exit codes.
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRing = 3;
inline constexpr int kExitOutput = 4;
inline constexpr int kExitHeavyTail = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HeavyTailRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kPrecisionEnv = "MOM_PRECISION";

// MOM_PRECISION if set, else 256. Throws UsageError on junk or < 64.
mpfr_prec_t default_precision();
void check_precision(long bits);

// Decimal beta squared exactly at `precision`, snapped to a/m (m <= 16) when
// within 1e-12; integers square exactly.
struct BetaInput {
  std::string text;
  numeric::BetaSq beta_sq{0L};
  numeric::BigFloat beta;  // as typed; sqrt of beta_sq for the rational form
  bool snapped = false;
  bool from_rational = false;  // given as --beta-sq-rational
};
BetaInput parse_beta(const std::string& text, mpfr_prec_t precision);
BetaInput parse_beta_sq_rational(const std::string& text, mpfr_prec_t precision);
// Exactly one of the two flags must be set.
BetaInput beta_from_flags(const std::optional<std::string>& beta, const std::optional<std::string>& beta_sq,
                          mpfr_prec_t precision);

inline constexpr int kDecimalDigits = 30;

Json encode(const numeric::Scalar& value);
Json encode_float(const numeric::BigFloat& value);
Json encode_double(double value);
std::string decimal(const numeric::Scalar& value, int digits = kDecimalDigits);
std::string decimal(double value);

// One command's output: a JSON record plus the same content as a CSV table.
struct Output {
  Json record;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Output make_output(const std::string& command, Json parameters, const std::string& provenance);

std::string render_json(const Output& out);
std::string render_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

// Writes to stdout in the requested format ("json" or "csv").
void emit(const Output& out, const std::string& format);
// Throws OutputError when the file cannot be written.
void write_file(const std::string& path, const std::string& text);

}  // namespace mom::cli
