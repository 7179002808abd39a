#pragma once

#include <compare>
#include <string>

namespace mom::numeric {

// Exponent p*beta^2 + q; 2^{(p beta^2 + q) n} = t^{p n} 2^{q n} with t = 2^{beta^2}.
struct ExpPair {
  long p = 0;
  long q = 0;

  friend auto operator<=>(const ExpPair&, const ExpPair&) = default;
  friend ExpPair operator+(ExpPair a, ExpPair b) { return {a.p + b.p, a.q + b.q}; }
  friend ExpPair operator-(ExpPair a, ExpPair b) { return {a.p - b.p, a.q - b.q}; }
  friend ExpPair operator*(long s, ExpPair a) { return {s * a.p, s * a.q}; }
  ExpPair operator-() const { return {-p, -q}; }

  bool is_zero() const { return p == 0 && q == 0; }
  std::string to_string() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

}  // namespace mom::numeric
