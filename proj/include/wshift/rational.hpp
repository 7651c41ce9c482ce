#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wshift {

/// Exact rational scalar. gmpxx keeps values canonical after arithmetic;
/// values built by hand must go through make_rational or parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p" or "p/q" with an optional leading sign. Decimals are rejected.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Decimal rendering rounded half away from zero. Presentation only.
std::string to_decimal(const Rational& q, int places = 6);

Rational pow(const Rational& base, unsigned long exponent);

int sign(const Rational& q);

} // namespace wshift
