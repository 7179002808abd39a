#include "mom/numeric/bigrat.hpp"

#include <stdexcept>

namespace mom::numeric {

BigRat make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  BigRat out(num, den);
  out.canonicalize();
  return out;
}

BigRat pow2_rat(long exponent) {
  BigInt power;
  const unsigned long magnitude = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                               : static_cast<unsigned long>(exponent);
  mpz_ui_pow_ui(power.get_mpz_t(), 2, magnitude);
  if (exponent >= 0) return BigRat(power);
  BigRat out(BigInt(1), power);
  out.canonicalize();
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string to_fraction_string(const BigRat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigRat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view part) {
    if (part.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::string s(part);
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed rational literal");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
  };
  if (slash == std::string_view::npos) return BigRat(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
  BigRat out(num, den);
  out.canonicalize();
  return out;
}

bool is_integer(const BigRat& value) { return value.get_den() == 1; }

}  // namespace mom::numeric
