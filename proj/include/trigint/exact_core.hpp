#pragma once

/**
 * @file exact_core.hpp
 * @brief Arbitrary-precision integers, reduced fractions and the
 *        combinatorial helpers shared by every exact evaluator.
 *
 * Rational is GMP's mpq_t behind boost::multiprecision: every operation
 * returns a canonical fraction (gcd(|num|, den) = 1, den > 0), so exact
 * equality is plain operator==.
 */

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace trigint {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// C(n, k); zero when k < 0 or k > n. Throws std::domain_error for n < 0.
BigInt binomial(long n, long k);

BigInt factorial(unsigned long n);

/// 2^e as an exact fraction, e may be negative.
Rational pow2(long e);

/// (-1)^k
inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

Rational make_rational(const BigInt& num, const BigInt& den);

/// "num/den" with the denominator always present ("3/1"); used by JSON.
std::string to_fraction_string(const Rational& q);

/// Reduced fraction with the denominator omitted when it is 1 ("3", "-1/4").
std::string to_display_string(const Rational& q);

/// Accepts "a", "a/b" and finite decimals ("0.25", "-1.5e-3"), all parsed
/// exactly. Throws std::invalid_argument on anything else or a zero
/// denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

}  // namespace trigint
