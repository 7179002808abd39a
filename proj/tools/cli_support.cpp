#include "cli_support.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mom::cli {

using numeric::BetaSq;
using numeric::BigFloat;
using numeric::BigRat;

void check_precision(long bits) {
  if (bits < numeric::kMinPrecision || bits > (1L << 20)) {
    throw UsageError("precision must be between " + std::to_string(numeric::kMinPrecision) + " and 2^20 bits");
  }
}

mpfr_prec_t default_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr || *env == '\0') return numeric::kDefaultPrecision;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0') throw UsageError(std::string(kPrecisionEnv) + " is not an integer: " + env);
  check_precision(bits);
  return bits;
}

namespace {

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

constexpr long kSnapMaxDen = 16;
const double kSnapTolerance = 1e-12;

}  // namespace

BetaInput parse_beta(const std::string& text, mpfr_prec_t precision) {
  BetaInput in;
  in.text = text;
  if (is_integer_text(text)) {
    const BigRat b = numeric::parse_rational(text);
    in.beta_sq = BetaSq(BigRat(b * b));
    in.beta = BigFloat(b, precision);
    return in;
  }
  try {
    in.beta = BigFloat::parse(text, precision);
  } catch (const std::exception&) {
    throw UsageError("cannot parse beta: " + text);
  }
  if (!in.beta.is_finite()) throw UsageError("beta must be finite");
  const BigFloat b2 = in.beta * in.beta;
  const BigFloat tol(kSnapTolerance, precision);
  for (long m = 1; m <= kSnapMaxDen; ++m) {
    const long a = std::lround((b2 * BigFloat(m, precision)).to_double());
    const BigRat cand = numeric::make_rational(a, m);
    if (abs(b2 - BigFloat(cand, precision)) < tol) {
      in.beta_sq = BetaSq(cand);
      in.snapped = true;
      return in;
    }
  }
  in.beta_sq = BetaSq(b2);
  return in;
}

BetaInput parse_beta_sq_rational(const std::string& text, mpfr_prec_t precision) {
  BetaInput in;
  in.text = text;
  BigRat r;
  try {
    r = numeric::parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("cannot parse beta^2 as p/m: " + text);
  }
  if (r < 0) throw UsageError("beta^2 must be nonnegative");
  in.beta_sq = BetaSq(r);
  in.beta = sqrt(BigFloat(r, precision));
  in.from_rational = true;
  return in;
}

BetaInput beta_from_flags(const std::optional<std::string>& beta, const std::optional<std::string>& beta_sq,
                          mpfr_prec_t precision) {
  if (beta.has_value() == beta_sq.has_value()) {
    throw UsageError("give exactly one of --beta and --beta-sq-rational");
  }
  return beta ? parse_beta(*beta, precision) : parse_beta_sq_rational(*beta_sq, precision);
}

Json encode(const numeric::Scalar& value) {
  Json j;
  if (const auto* r = std::get_if<BigRat>(&value)) {
    j["kind"] = "rational";
    j["value"] = numeric::to_fraction_string(*r);
    j["decimal"] = decimal(value);
  } else if (const auto* q = std::get_if<numeric::Radical>(&value)) {
    j["kind"] = "radical";
    j["root_index"] = q->index();
    j["value"] = q->to_string();
    j["decimal"] = decimal(value);
  } else {
    j = encode_float(std::get<BigFloat>(value));
  }
  return j;
}

Json encode_float(const BigFloat& value) {
  Json j;
  j["kind"] = "float";
  j["value"] = value.to_string();
  j["precision"] = value.precision();
  return j;
}

Json encode_double(double value) {
  Json j;
  j["kind"] = "float";
  j["value"] = decimal(value);
  j["precision"] = 53;
  return j;
}

std::string decimal(const numeric::Scalar& value, int digits) {
  return numeric::scalar_to_float(value).to_string(digits);
}

std::string decimal(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Output make_output(const std::string& command, Json parameters, const std::string& provenance) {
  Output out;
  out.record["command"] = command;
  out.record["parameters"] = std::move(parameters);
  out.record["result"] = Json::object();
  out.record["provenance"] = provenance;
  return out;
}

std::string render_json(const Output& out) { return out.record.dump(2) + "\n"; }

std::string render_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << field(cells[i]);
    os << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

void emit(const Output& out, const std::string& format) {
  std::cout << (format == "csv" ? render_csv(out.header, out.rows) : render_json(out));
  std::cout.flush();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw OutputError("cannot open " + path + " for writing");
  f << text;
  f.close();
  if (!f) throw OutputError("failed writing " + path);
}

}  // namespace mom::cli
