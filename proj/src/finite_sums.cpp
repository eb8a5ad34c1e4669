#include "posetzeta/finite_sums.hpp"

#include <stdexcept>

namespace pz {

RationalPolynomial RationalPolynomial::monomial(unsigned degree, const Rational& coeff) {
  RationalPolynomial p;
  p.add_term(degree, coeff);
  return p;
}

int RationalPolynomial::degree() const noexcept {
  return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first);
}

Rational RationalPolynomial::coefficient(unsigned degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational RationalPolynomial::at_one() const {
  Rational sum = 0;
  for (const auto& [deg, c] : coeffs_) {
    sum += c;
  }
  return sum;
}

void RationalPolynomial::add_term(unsigned degree, const Rational& coeff) {
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = coeffs_.try_emplace(degree, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      coeffs_.erase(it);
    }
  }
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  for (const auto& [deg, c] : other.coeffs_) {
    add_term(deg, c);
  }
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  for (const auto& [deg, c] : other.coeffs_) {
    add_term(deg, -c);
  }
  return *this;
}

RationalPolynomial operator-(const Rational& c, const RationalPolynomial& p) {
  RationalPolynomial out = RationalPolynomial::monomial(0, c);
  out -= p;
  return out;
}

RationalPolynomial RationalPolynomial::divide_by_t() const {
  if (at_zero() != 0) {
    throw std::logic_error("divide_by_t: polynomial does not vanish at 0");
  }
  RationalPolynomial out;
  for (const auto& [deg, c] : coeffs_) {
    out.coeffs_.emplace(deg - 1, c);
  }
  return out;
}

RationalPolynomial RationalPolynomial::divide_by_one_minus_t() const {
  if (at_one() != 0) {
    throw std::logic_error("divide_by_one_minus_t: polynomial does not vanish at 1");
  }
  // p = (1 - t) q  =>  q_m = c_0 + ... + c_m for m < deg p.
  RationalPolynomial out;
  const int top = degree();
  Rational prefix = 0;
  for (int m = 0; m < top; ++m) {
    prefix += coefficient(static_cast<unsigned>(m));
    out.add_term(static_cast<unsigned>(m), prefix);
  }
  return out;
}

RationalPolynomial RationalPolynomial::antiderivative() const {
  RationalPolynomial out;
  for (const auto& [deg, c] : coeffs_) {
    Rational next = c / (deg + 1);
    out.coeffs_.emplace(deg + 1, next);
  }
  return out;
}

std::vector<Rational> harmonic_sums_upto(const Index& k, long N) {
  if (k.empty()) {
    throw std::invalid_argument("harmonic_sum: empty index");
  }
  if (N <= 0) {
    throw std::invalid_argument("harmonic_sum: N must be >= 1");
  }
  const std::size_t n = k.depth();
  // inner[j] = sum over m >= m_j >= ... >= m_n >= 1 of the tail product.
  std::vector<Rational> inner(n, Rational(0));
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(N));
  for (long m = 1; m <= N; ++m) {
    const auto um = static_cast<unsigned long>(m);
    for (std::size_t j = n - 1; j >= 1; --j) {
      const Rational below = (j + 1 == n) ? Rational(1) : inner[j + 1];
      inner[j] += below * inverse_power(um, k[j]);
    }
    const Rational below = (n == 1) ? Rational(1) : inner[1];
    Rational s = below * inverse_power(um, k[0]);
    s.canonicalize();
    out.push_back(std::move(s));
  }
  return out;
}

Rational harmonic_sum(const Index& k, long N) {
  return harmonic_sums_upto(k, N).back();
}

Rational duality_lhs(const Index& k, long N) {
  const std::vector<Rational> sums = harmonic_sums_upto(k, N);
  Rational total = 0;
  const auto top = static_cast<unsigned long>(N - 1);
  for (unsigned long i = 0; i <= top; ++i) {
    const Rational term = Rational(binomial(top, i)) * sums[i];
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Rational zigzag_integral_exact(const Index& k, long N) {
  if (k.empty()) {
    throw std::invalid_argument("zigzag_integral_exact: empty index");
  }
  if (N <= 0) {
    throw std::invalid_argument("zigzag_integral_exact: N must be >= 1");
  }
  const unsigned w = k.weight();
  const auto delta = delta_map(k);
  const PartialSumSet j_set = extended_partial_sum_set(k);

  // state: the integral over t_1..t_{i-1}, as a polynomial in t_i.
  RationalPolynomial state = RationalPolynomial::monomial(static_cast<unsigned>(N - 1));
  for (unsigned i = 1; i <= w; ++i) {
    RationalPolynomial integrand;
    if (i == 1) {
      integrand = state;
    } else if (delta[i - 1] == 0) {
      integrand = state.divide_by_t();
    } else {
      integrand = state.divide_by_one_minus_t();
    }
    RationalPolynomial primitive = integrand.antiderivative();
    if (i == w) {
      return primitive.at_one();
    }
    if (j_set.contains(i)) {
      // t_i > t_{i+1}: integrate t_i over [t_{i+1}, 1].
      state = primitive.at_one() - primitive;
    } else {
      // t_i < t_{i+1}: integrate t_i over [0, t_{i+1}].
      state = std::move(primitive);
    }
  }
  throw std::logic_error("zigzag_integral_exact: unreachable");
}

TruncatedSum truncated_zeta_star(const Index& k, long M) {
  if (k.empty() || !k.is_admissible()) {
    throw std::invalid_argument("truncated_zeta_star: index " + k.to_string() +
                                " is not admissible (the series diverges)");
  }
  if (M <= 0) {
    throw std::invalid_argument("truncated_zeta_star: M must be >= 1");
  }
  TruncatedSum out;
  for (const Rational& s : harmonic_sums_upto(k, M)) {
    out.value += s;
  }
  // s_k(N) <= N^{-k1} H_N^{n-1} <= N^{-k1} (1 + ln N)^{n-1}.
  out.tail_bound = log_power_tail_bound(k[0], static_cast<unsigned>(k.depth() - 1),
                                        static_cast<unsigned long>(M));
  return out;
}

} // namespace pz
