#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wfomc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" with an optional sign. Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Decimal integer when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational pow(const Rational& base, std::uint64_t exponent);
Integer pow(const Integer& base, std::uint64_t exponent);

Integer factorial(std::uint64_t n);
Integer binomial(std::uint64_t n, std::uint64_t k);

/// |k|! / prod k_i!
Integer multinomial(std::span<const std::uint32_t> parts);

}  // namespace wfomc
