#include "posetzeta/families.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace pz;

TEST_CASE("Arakawa-Kaneko posets") {
  CHECK(testing::same_up_to_renaming(ak_poset(2, 1), chain_poset(Index{3})));
  const LabeledPoset x = ak_poset(2, 2);
  CHECK(x.size() == 4);
  CHECK(is_admissible(x));
  CHECK(x.less(x.vertex("u1"), x.vertex("x")));
  CHECK_FALSE(x.comparable(x.vertex("u1"), x.vertex("c1")));
  // three extensions: u1 sits under x anywhere in the 3-chain
  CHECK(decompose(x) == 2 * ZetaCombination::single(Index{3, 1}) + ZetaCombination::single(Index{2, 2}));
  CHECK(decompose(ak_poset(1, 2)) == 2 * ZetaCombination::single(Index{2, 1}));
  CHECK_THROWS_AS(ak_poset(0, 2), std::invalid_argument);
}

TEST_CASE("Ohno's formula for small k and n") {
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned n = 1; k + n <= 6; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(verify_ohno(k, n));
      CHECK(ak_antichain_factor(k, n) == factorial(n - 1));
    }
  }
}

TEST_CASE("Mordell-Tornheim posets") {
  const LabeledPoset x = mt_poset({1, 1}, 2);
  CHECK(x.size() == 4);
  CHECK(is_admissible(x));
  CHECK(testing::same_up_to_renaming(mt_poset({3}, 2), chain_poset(Index{5})));
  CHECK(is_homogeneous(decompose(mt_poset({1, 1, 1}, 2)), 5, 3));
  CHECK(decompose(mt_poset({1, 1, 1}, 1)) == 6 * ZetaCombination::single(Index{2, 1, 1}));
  CHECK_THROWS_AS(mt_poset({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(mt_poset({1, 0}, 2), std::invalid_argument);
}

TEST_CASE("Bradley-Zhou reports") {
  const BradleyZhouReport r = verify_bradley_zhou({1, 1}, 2, 2000);
  CHECK(r.passed());
  CHECK(r.decomposition == 2 * ZetaCombination::single(Index{3, 1}));
  CHECK(abs(r.from_series.value - r.from_decomposition.value) <= Real(1e-3));
  CHECK(verify_bradley_zhou({2}, 2, 2000).passed());
  CHECK(verify_bradley_zhou({1, 2}, 1, 2000).passed());
  CHECK(verify_bradley_zhou({1, 1, 1}, 2, 1000).passed());
}

TEST_CASE("root-system posets") {
  const LabeledPoset x = kmt_poset({Index{2}, Index{1}, Index{1}});
  CHECK(x.size() == 4);
  CHECK(is_admissible(x));
  CHECK(decompose(x) == 2 * ZetaCombination::single(Index{2, 1, 1}));
  // the y branch is numbered top-down
  const LabeledPoset y = kmt_poset({Index{2}, Index{2}, Index{1}});
  CHECK(y.less(y.vertex("y2"), y.vertex("y1")));
  CHECK(y.label(y.vertex("y1")) == 0);
  CHECK(y.less(y.vertex("y1"), y.vertex("x1")));
  CHECK(y.less(y.vertex("z1"), y.vertex("x1")));
  CHECK_FALSE(y.comparable(y.vertex("y1"), y.vertex("z1")));
  // empty top chain: the two branches alone
  CHECK(kmt_poset({Index{}, Index{2}, Index{2}}).size() == 4);
  CHECK(KmtShape{Index{2}, Index{1}, Index{1}}.to_string() == "(2;1;1)");
}

TEST_CASE("root-system relation: word-level derivation") {
  const KmtDerivation d = derive_kmt_relation({Index{1}, Index{1}, Index{1}});
  CHECK(d.identity_holds());
  CHECK(d.steps_hold());
  CHECK(d.terms_hold());
  for (const KmtTerm& t : d.terms) {
    CHECK(t.observed_interleavings == t.binomial_coefficient);
  }
  CHECK_THROWS_AS(derive_kmt_relation({Index{2}, Index{}, Index{1}}), std::invalid_argument);
  CHECK_THROWS_AS(kmt_relation_lhs_rhs({Index{1}, Index{1}, Index{1}}), std::invalid_argument);
}

TEST_CASE("root-system relation: binomial coefficients") {
  const KmtDerivation d = derive_kmt_relation({Index{2}, Index{2}, Index{1}});
  REQUIRE(d.identity_holds());
  // q1 = 2, r1 = 1: the q side contributes C(0,0), C(1,1); the r side C(1,0)
  std::vector<std::pair<unsigned, Integer>> q_side;
  for (const KmtTerm& t : d.terms) {
    if (t.from_q_branch) {
      q_side.emplace_back(t.j, t.binomial_coefficient);
    }
  }
  REQUIRE(q_side.size() == 2);
  CHECK(q_side[0].second == 1);
  CHECK(q_side[1].second == 1);
  const auto [lhs, rhs] = kmt_relation_lhs_rhs({Index{2}, Index{2}, Index{1}});
  CHECK(lhs == rhs);
  CHECK(is_homogeneous(lhs, 5, 3));
}

TEST_CASE("root-system relation holds on the series") {
  // Compare the shape against the binomial sum of its reduced shapes using
  // only the direct series, never the posets.
  for (const KmtShape& shape : {KmtShape{Index{2}, Index{2}, Index{1}}, KmtShape{Index{2}, Index{1}, Index{2}},
                                KmtShape{Index{3}, Index{1}, Index{1}}}) {
    CAPTURE(shape.to_string());
    const long M = 1500;
    const ApproxValue lhs = kmt_series_eval(shape.p, shape.q, shape.r, M);
    ApproxValue rhs;
    for (const KmtTerm& t : derive_kmt_relation(shape).terms) {
      rhs += Real(t.binomial_coefficient.get_d()) *
             kmt_series_eval(t.reduced.p, t.reduced.q, t.reduced.r, M);
    }
    CHECK(agree_within_bounds(lhs, rhs));
    CHECK(abs(lhs.value - rhs.value) < Real(1e-2));
  }
}
