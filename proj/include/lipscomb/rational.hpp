#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lipscomb {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q" and finite decimals such as "-0.125".
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

// Exact power with non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

// Dyadic r >= sqrt(q) within about 2^-64 of it. q must be non-negative.
Rational sqrt_upper(const Rational& q);

// Dyadic r with 0 <= r <= sqrt(q), within about 2^-64 of it.
Rational sqrt_lower(const Rational& q);

}  // namespace lipscomb
