#include "posetzeta/finite_sums.hpp"
#include "posetzeta/numeric.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace pz;

TEST_CASE("harmonic sums: frozen values") {
  CHECK(harmonic_sum(Index{1, 1}, 2) == make_rational(3, 4));
  CHECK(harmonic_sum(Index{2}, 3) == make_rational(1, 9));
  CHECK(harmonic_sum(Index{1}, 1) == 1);
  CHECK(harmonic_sum(Index{2, 1}, 2) == make_rational(3, 8));
}

TEST_CASE("harmonic sums agree with nested enumeration") {
  for (const Index& k : testing::all_indices(5)) {
    for (long N = 1; N <= 7; ++N) {
      CAPTURE(k.to_string());
      CAPTURE(N);
      CHECK(harmonic_sum(k, N) == testing::brute_harmonic_sum(k, N));
    }
  }
  const auto table = harmonic_sums_upto(Index{2, 1, 1}, 9);
  REQUIRE(table.size() == 9);
  for (long N = 1; N <= 9; ++N) {
    CHECK(table[N - 1] == testing::brute_harmonic_sum(Index{2, 1, 1}, N));
  }
}

TEST_CASE("harmonic sums reject bad arguments") {
  CHECK_THROWS_AS(harmonic_sum(Index{2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(harmonic_sum(Index{}, 3), std::invalid_argument);
}

TEST_CASE("duality sum: frozen values") {
  CHECK(duality_lhs(Index{1, 1}, 2) == make_rational(1, 4));
  CHECK(duality_lhs(Index{1}, 1) == 1);
  CHECK(duality_lhs(Index{2, 3}, 4) == testing::brute_harmonic_sum(Index{1, 2, 1, 1}, 4));
}

TEST_CASE("duality sum equals the transposed harmonic sum") {
  for (const Index& k : testing::all_indices(5)) {
    for (long N = 1; N <= 8; ++N) {
      CAPTURE(k.to_string());
      CAPTURE(N);
      CHECK(duality_lhs(k, N) == testing::brute_harmonic_sum(transpose(k), N));
    }
  }
}

TEST_CASE("zig-zag integral: frozen values") {
  CHECK(zigzag_integral_exact(Index{2}, 3) == make_rational(1, 9));
  CHECK(zigzag_integral_exact(Index{1}, 4) == make_rational(1, 4));
  CHECK(zigzag_integral_exact(Index{2, 1, 2}, 2) == harmonic_sum(Index{2, 1, 2}, 2));
}

TEST_CASE("zig-zag integral equals the harmonic sum") {
  for (const Index& k : testing::all_indices(5)) {
    for (long N = 1; N <= 6; ++N) {
      CAPTURE(k.to_string());
      CAPTURE(N);
      CHECK(zigzag_integral_exact(k, N) == testing::brute_harmonic_sum(k, N));
    }
  }
}

TEST_CASE("polynomial division helpers") {
  auto p = RationalPolynomial::monomial(2);
  p -= RationalPolynomial::monomial(1);
  auto t_minus_one = RationalPolynomial::monomial(1);
  t_minus_one -= RationalPolynomial::monomial(0);
  CHECK(p.divide_by_t() == t_minus_one);
  // (t^2 - t) / (1 - t) = -t
  CHECK(p.divide_by_one_minus_t() == RationalPolynomial::monomial(1, -1));
  CHECK_THROWS_AS(RationalPolynomial::monomial(0).divide_by_t(), std::logic_error);
  CHECK_THROWS_AS(RationalPolynomial::monomial(1).divide_by_one_minus_t(), std::logic_error);
  CHECK(RationalPolynomial::monomial(2, 3).antiderivative() == RationalPolynomial::monomial(3));
}

TEST_CASE("truncated zeta-star: frozen values") {
  const auto one_term = truncated_zeta_star(Index{2}, 1);
  CHECK(one_term.value == 1);
  // zeta(2) - 1 = 0.6449...
  CHECK(one_term.tail_bound >= make_rational(645, 1000));

  Rational cubes = 0;
  for (long n = 1; n <= 10; ++n) {
    cubes += inverse_power(n, 3);
  }
  CHECK(truncated_zeta_star(Index{3}, 10).value == cubes);

  CHECK_THROWS_AS(truncated_zeta_star(Index{1, 2}, 10), std::invalid_argument);
}

TEST_CASE("truncated zeta-star(2,1) brackets 2 zeta(3)") {
  const double two_zeta3 = 2.4041138063191885;
  const auto t = truncated_zeta_star(Index{2, 1}, 100);
  const double lo = t.value.get_d();
  const double hi = lo + t.tail_bound.get_d();
  CHECK(lo <= two_zeta3);
  CHECK(hi >= two_zeta3);
  CHECK(hi - lo < 0.5);
}

TEST_CASE("truncation is monotone and the tail bound is rigorous") {
  for (const Index& k : {Index{2}, Index{2, 1}, Index{3, 1, 1}, Index{2, 2}}) {
    CAPTURE(k.to_string());
    TruncatedSum previous = truncated_zeta_star(k, 1);
    for (long M = 2; M <= 40; ++M) {
      const TruncatedSum current = truncated_zeta_star(k, M);
      CHECK(current.value > previous.value);
      // the value plus its bound never drops below a later partial sum
      CHECK(previous.value + previous.tail_bound >= current.value);
      previous = current;
    }
    const auto small = truncated_zeta_star(k, 10);
    const auto large = truncated_zeta_star(k, 160);
    CHECK(small.value + small.tail_bound >= large.value + 0);
    CHECK(large.tail_bound < small.tail_bound);
  }
}

TEST_CASE("tail bound helper") {
  CHECK(log_power_tail_threshold(2, 0) == 1);
  CHECK(log_power_tail_threshold(2, 3) >= 1);
  for (unsigned d = 0; d <= 3; ++d) {
    // direct partial sums of the tail beyond M stay below the bound
    const unsigned long M = 20;
    double partial = 0;
    for (unsigned long m = M + 1; m <= 200000; ++m) {
      partial += std::pow(1.0 + std::log(double(m)), d) / (double(m) * double(m));
    }
    CHECK(log_power_tail_bound(2, d, M).get_d() >= partial);
    CHECK(log_power_tail_bound(2, d, M + 10) < log_power_tail_bound(2, d, M));
  }
  CHECK_THROWS_AS(log_power_tail_bound(1, 0, 10), std::invalid_argument);
}

TEST_CASE("truncated zeta-star matches the numeric evaluation of its MZV expansion") {
  // zeta*(3,1) = zeta(3,1) + zeta(4)
  const auto exact = truncated_zeta_star(Index{3, 1}, 300);
  const ApproxValue numeric = mzv_eval(Index{3, 1}, 200000) + mzv_eval(Index{4}, 200000);
  const Real gap = abs(to_real(exact.value) - numeric.value);
  CHECK(gap <= to_real(exact.tail_bound) + numeric.error_bound);
}
