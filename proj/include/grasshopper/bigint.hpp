#pragma once

#include <gmpxx.h>

#include <string>

namespace grasshopper {

/// Exact signed integer used for every coefficient.
using BigInt = mpz_class;
/// Exact rational; the olympiad module's stand-in for reals.
using Rational = mpq_class;

/// Parses an optionally signed decimal integer; throws InputError.
BigInt parse_bigint(const std::string& text);

/// Parses "p/q", "p" or a decimal integer into canonical form; throws
/// InputError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

std::string to_decimal(const BigInt& value);
std::string to_string(const Rational& value);

/// Decimal scientific notation rounded half-up to `significant` digits,
/// e.g. "8.587e34". Values with fewer digits than requested are padded
/// with zeros ("9.000e1" for 90 at four digits).
std::string to_scientific(const BigInt& value, int significant = 4);

}  // namespace grasshopper
