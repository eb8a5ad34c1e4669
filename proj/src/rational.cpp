#include "posetzeta/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace pz {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Rational inverse_power(unsigned long m, unsigned k) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), m, k);
  return Rational(Integer(1), den);
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational");
  }
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Rational log_upper_bound(unsigned long m) {
  if (m == 0) {
    throw std::invalid_argument("log_upper_bound: m must be positive");
  }
  if (m == 1) {
    return 0;
  }
  // std::log is accurate to a few ulps; 2^-30 dwarfs that for any m < 2^53.
  Rational r(std::log(static_cast<double>(m)));
  r += Rational(1, 1u << 30);
  return r;
}

unsigned long log_power_tail_threshold(unsigned s, unsigned d) {
  // d/dx (1+ln x)^d x^-s <= 0  iff  1 + ln x >= d/s.
  const double x = std::exp(static_cast<double>(d) / s - 1.0);
  if (x <= 1.0) {
    return 1;
  }
  return static_cast<unsigned long>(std::ceil(x)) + 1;
}

namespace {

Rational integral_tail(unsigned s, unsigned d, unsigned long from) {
  const unsigned a = s - 1;
  const Rational v = 1 + log_upper_bound(from);
  const Rational av = a * v;
  Rational series = 0;
  Rational term = 1;
  for (unsigned j = 0; j <= d; ++j) {
    if (j > 0) {
      term *= av;
      term /= j;
    }
    series += term;
  }
  Integer a_pow;
  mpz_ui_pow_ui(a_pow.get_mpz_t(), a, d + 1);
  Rational out = inverse_power(from, a) * Rational(factorial(d)) / Rational(a_pow) * series;
  out.canonicalize();
  return out;
}

} // namespace

Rational log_power_tail_bound(unsigned s, unsigned d, unsigned long M) {
  if (s < 2) {
    throw std::invalid_argument("log_power_tail_bound: exponent must be >= 2");
  }
  if (M == 0) {
    throw std::invalid_argument("log_power_tail_bound: M must be positive");
  }
  const unsigned long start = log_power_tail_threshold(s, d);
  Rational explicit_terms = 0;
  unsigned long from = M;
  if (M < start) {
    for (unsigned long m = M + 1; m <= start; ++m) {
      Rational base = 1 + log_upper_bound(m);
      Rational num = 1;
      for (unsigned i = 0; i < d; ++i) {
        num *= base;
      }
      explicit_terms += num * inverse_power(m, s);
    }
    from = start;
  }
  return explicit_terms + integral_tail(s, d, from);
}

} // namespace pz
