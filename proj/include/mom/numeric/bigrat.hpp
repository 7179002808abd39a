#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mom::numeric {

// Arbitrary-precision rational. mpq_class keeps values canonical (reduced,
// positive denominator) as long as every construction goes through the
// helpers below or gmpxx arithmetic.
using BigRat = mpq_class;
using BigInt = mpz_class;

// Canonicalized num/den; den must be nonzero.
BigRat make_rational(long num, long den);

// Exact power of two, negative exponents allowed.
BigRat pow2_rat(long exponent);

BigInt binomial(unsigned long n, unsigned long k);

// "numerator/denominator", always with the slash, e.g. "10/1".
std::string to_fraction_string(const BigRat& value);

// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
BigRat parse_rational(std::string_view text);

bool is_integer(const BigRat& value);

}  // namespace mom::numeric
