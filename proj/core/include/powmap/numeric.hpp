#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

namespace powmap {

using Integer = mpz_class;
using Rational = mpq_class;

/// Number of bits in n >= 1 (bit_length(1) = 1).
std::size_t bit_length(const Integer& n);

Integer pow_integer(const Integer& base, unsigned long exponent);

/// base^exponent mod modulus (modulus >= 1, exponent >= 0).
Integer powmod(const Integer& base, const Integer& exponent, const Integer& modulus);

/// num/den reduced to lowest terms, den > 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "num/den" in lowest terms, e.g. "5/3", "-1/2", "7/1".
std::string to_ratio_string(const Rational& q);

/// Parses "num/den" or a bare integer. Throws std::invalid_argument on junk.
Rational rational_from_ratio_string(const std::string& s);

/// Deterministic decimal rendering with round-half-up at the last kept digit.
/// Plain notation for moderate magnitudes, scientific otherwise; trailing
/// zeros in the fraction part are trimmed ("1/2" -> "0.5").
std::string to_decimal_string(const Rational& q, int significant_digits = 12);

double to_double(const Rational& q);

}  // namespace powmap
