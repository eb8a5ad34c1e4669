#pragma once

#include "posetzeta/index.hpp"
#include "posetzeta/rational.hpp"

#include <map>
#include <vector>

namespace pz {

/// Polynomial in one variable with exact rational coefficients. Only nonzero
/// coefficients are stored.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  static RationalPolynomial monomial(unsigned degree, const Rational& coeff = 1);

  const std::map<unsigned, Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept;
  Rational coefficient(unsigned degree) const;

  Rational at_zero() const { return coefficient(0); }
  Rational at_one() const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  friend RationalPolynomial operator-(const Rational& c, const RationalPolynomial& p);

  /// p(t)/t; requires p(0) = 0.
  RationalPolynomial divide_by_t() const;
  /// p(t)/(1-t); requires p(1) = 0.
  RationalPolynomial divide_by_one_minus_t() const;
  /// Antiderivative vanishing at 0.
  RationalPolynomial antiderivative() const;

  bool operator==(const RationalPolynomial&) const = default;

private:
  void add_term(unsigned degree, const Rational& coeff);
  std::map<unsigned, Rational> coeffs_;
};

/// s_k(N): sum over N = m1 >= m2 >= ... >= mn >= 1 of 1/(m1^k1 ... mn^kn).
Rational harmonic_sum(const Index& k, long N);

/// s_k(1), ..., s_k(N) in one pass (entry i holds s_k(i+1)).
std::vector<Rational> harmonic_sums_upto(const Index& k, long N);

/// sum_{i=0}^{N-1} (-1)^i C(N-1, i) s_k(i+1); equals s_{k*}(N).
Rational duality_lhs(const Index& k, long N);

/// Evaluates the integral of t1^{N-1} dt1 w_{d(2)}(t2) ... w_{d(|k|)}(t_|k|)
/// over the zig-zag region of k, one variable at a time, keeping the partial
/// integral as an exact polynomial in the next variable.
Rational zigzag_integral_exact(const Index& k, long N);

struct TruncatedSum {
  Rational value;
  Rational tail_bound;
};

/// Partial sum of zeta-star(k) over N <= M with a rigorous bound on the rest.
TruncatedSum truncated_zeta_star(const Index& k, long M);

} // namespace pz
