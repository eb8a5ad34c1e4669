#pragma once

#include <gmpxx.h>

#include <string>

namespace pz {

// Exact arithmetic. mpq_class keeps the denominator positive and the fraction
// reduced after every operation (we canonicalize on construction).
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den = 1);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// 1 / m^k exactly.
Rational inverse_power(unsigned long m, unsigned k);

// "num/den", always with an explicit denominator ("2/1").
std::string to_fraction_string(const Rational& q);

// Accepts "p", "p/q", optionally signed. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// A rational r with r >= ln(m), for integer m >= 1 (exact 0 at m = 1).
Rational log_upper_bound(unsigned long m);

// Rigorous upper bound on  sum_{m > M} (1 + ln m)^d / m^s  for s >= 2,
// returned as an exact rational. Below the point where the summand starts to
// decrease the terms are added one by one; beyond it the sum is dominated by
// the integral, which has the closed form
//   M^{-a} * d! / a^{d+1} * sum_{j<=d} (a V)^j / j!,   a = s - 1, V = 1 + ln M.
Rational log_power_tail_bound(unsigned s, unsigned d, unsigned long M);

// Smallest M >= 1 at which the summand above is nonincreasing on [M, inf).
unsigned long log_power_tail_threshold(unsigned s, unsigned d);

} // namespace pz
