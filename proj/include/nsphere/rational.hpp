#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nsphere {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator, zero as 0/1).
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const BigRational& value);

BigRational parse_rational(const std::string& text);

BigInteger int_pow(std::int64_t base, unsigned exponent);

BigInteger factorial(unsigned m);

double to_double(const BigRational& value);

}  // namespace nsphere
