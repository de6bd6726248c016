#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace recgrow {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" exactly. Throws ParseError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses a plain decimal literal such as "1.5028" or "-3" exactly.
Rational parse_decimal(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

bool is_integer(const Rational& x);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// x^e by binary powering of numerator and denominator.
Rational pow(const Rational& x, std::uint64_t e);
Integer pow(const Integer& x, std::uint64_t e);

/// m * 2^e, exact.
Rational ldexp(const Integer& m, long e);

/// Number of bits of |x|; zero for x == 0.
std::size_t bit_length(const Integer& x);

/// floor(log2|x|) for x != 0, computed exactly.
long floor_log2(const Rational& x);

enum class Rounding { Down, Up };

/// Fixed-point decimal with `digits` fractional digits, rounded in the
/// given direction (toward -inf for Down, +inf for Up).
std::string to_decimal(const Rational& x, unsigned digits, Rounding mode);

}  // namespace recgrow
