#include "mom/numeric/genpoly.hpp"

#include <sstream>

namespace mom::numeric {

GenPoly GenPoly::term(ExpPair e, RatFun c) {
  GenPoly g;
  g.add_term(e, c);
  return g;
}

RatFun GenPoly::coefficient(ExpPair e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? RatFun() : it->second;
}

void GenPoly::add_term(ExpPair e, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GenPoly& GenPoly::operator+=(const GenPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

GenPoly& GenPoly::operator*=(const RatFun& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  GenPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

GenPoly GenPoly::shifted(ExpPair shift) const {
  GenPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
  return out;
}

RatFun GenPoly::at_zero() const {
  RatFun sum;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::string GenPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    out << "[" << it->second.to_string() << "]*2^(" << it->first.p << "b2" << (it->first.q < 0 ? "" : "+")
        << it->first.q << ")n";
    first = false;
  }
  return out.str();
}

}  // namespace mom::numeric
