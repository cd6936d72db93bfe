#include "lipscomb/rational.hpp"

#include <cmath>

#include "lipscomb/error.hpp"

namespace lipscomb {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidInput("empty number");
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw InvalidInput("mixed decimal/fraction: " + s);
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t scale = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") throw InvalidInput("bad number: " + s);
      if (digits[0] == '+') digits.erase(0, 1);
      Integer num(digits, 10);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    Rational q(s, 10);
    if (q.get_den() == 0) throw InvalidInput("zero denominator: " + std::string(text));
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InvalidInput("bad number: " + std::string(text));
  }
}

double to_double(const Rational& q) { return q.get_d(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

namespace {

// Rational approximation of sqrt(q) scaled by 2^bits, via integer sqrt.
// Returns floor(sqrt(q) * 2^bits) as an integer.
Integer scaled_isqrt(const Rational& q, unsigned bits) {
  // floor(sqrt(num * 4^bits / den)) == floor(sqrt(q) * 2^bits)
  Integer scaled = q.get_num();
  scaled <<= 2 * bits;
  scaled /= q.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return root;
}

constexpr unsigned kSqrtBits = 64;

}  // namespace

Rational sqrt_upper(const Rational& q) {
  if (sgn(q) < 0) throw InvalidInput("sqrt of negative rational");
  if (sgn(q) == 0) return 0;
  Integer denominator = 1;
  denominator <<= kSqrtBits;
  Rational r(scaled_isqrt(q, kSqrtBits) + 1, denominator);
  r.canonicalize();
  return r;
}

Rational sqrt_lower(const Rational& q) {
  if (sgn(q) < 0) throw InvalidInput("sqrt of negative rational");
  Integer denominator = 1;
  denominator <<= kSqrtBits;
  // floor(num * 4^k / den) may round the radicand down; the root stays a lower bound.
  Rational r(scaled_isqrt(q, kSqrtBits), denominator);
  r.canonicalize();
  return r;
}

}  // namespace lipscomb
