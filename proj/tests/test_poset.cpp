#include "posetzeta/poset.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <set>

using namespace pz;

namespace {

LabeledPoset chain32() {
  return from_covers({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}},
                     {{"a", 1}, {"b", 0}, {"c", 1}, {"d", 0}, {"e", 0}});
}

LabeledPoset antichain(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("p" + std::to_string(i));
  }
  return LabeledPoset(ids, std::vector<LabeledPoset::Label>(n, 1), {});
}

std::set<std::vector<std::size_t>> as_set(const std::vector<LinearExtension>& exts) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& e : exts) {
    out.insert(e.order);
  }
  return out;
}

} // namespace

TEST_CASE("from_covers builds the closure") {
  const LabeledPoset x = chain32();
  CHECK(x.size() == 5);
  CHECK(x.depth() == 2);
  CHECK(x.is_chain());
  CHECK(x.less(x.vertex("a"), x.vertex("e")));
  CHECK(x.covers().size() == 4);
  CHECK(is_admissible(x));
}

TEST_CASE("from_covers rejects malformed input") {
  CHECK_THROWS_AS(from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {{"a", 1}, {"b", 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_covers({"a"}, {{"a", "z"}}, {{"a", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(from_covers({"a", "b"}, {}, {{"a", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(from_covers({"a"}, {}, {{"a", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(from_covers({"a", "a"}, {}, {{"a", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(from_covers({"a"}, {{"a", "a"}}, {{"a", 1}}), std::invalid_argument);
}

TEST_CASE("admissibility of posets") {
  CHECK(is_admissible(LabeledPoset{}));
  CHECK_FALSE(is_admissible(antichain(1)));
  // bottom labeled 0
  CHECK_FALSE(is_admissible(from_covers({"a", "b"}, {{"a", "b"}}, {{"a", 0}, {"b", 0}})));
  // top labeled 1
  CHECK_FALSE(is_admissible(from_covers({"a", "b"}, {{"a", "b"}}, {{"a", 1}, {"b", 1}})));
  CHECK(is_admissible(zigzag_poset(Index{2, 1})));
}

TEST_CASE("chain posets spell the index word") {
  const LabeledPoset c = chain_poset(Index{3, 2});
  CHECK(c.labels() == std::vector<LabeledPoset::Label>{1, 0, 1, 0, 0});
  CHECK(testing::same_up_to_renaming(c, chain32()));
  CHECK(chain_poset(Index{}).empty());
  CHECK_THROWS_AS(chain_poset(Index{1, 2}), std::invalid_argument);
  CHECK(vertical_diagram(Index{1, 2}).labels() == std::vector<LabeledPoset::Label>{1, 0, 1});
}

TEST_CASE("zig-zag posets") {
  const LabeledPoset z = zigzag_poset(Index{2, 3});
  // t1 < t2 > t3 < t4 < t5, labels delta = (1,0,1,0,0)
  CHECK(z.labels() == std::vector<LabeledPoset::Label>{1, 0, 1, 0, 0});
  CHECK(z.less(z.vertex("t1"), z.vertex("t2")));
  CHECK(z.less(z.vertex("t3"), z.vertex("t2")));
  CHECK(z.less(z.vertex("t3"), z.vertex("t5")));
  CHECK_FALSE(z.comparable(z.vertex("t1"), z.vertex("t3")));
  CHECK(z.covers().size() == 4);
  CHECK(testing::same_up_to_renaming(zigzag_poset(Index{4}), chain_poset(Index{4})));
  CHECK_THROWS_AS(zigzag_poset(Index{1, 1}), std::invalid_argument);
}

TEST_CASE("direct sums") {
  const LabeledPoset x = chain_poset(Index{2});
  const LabeledPoset sum = direct_sum(x, chain_poset(Index{2}));
  CHECK(sum.size() == 4);
  CHECK(sum.ids()[0] == "L.v1");
  CHECK(sum.ids()[2] == "R.v1");
  CHECK(is_admissible(sum));
  CHECK_FALSE(sum.comparable(0, 2));
  CHECK(linear_extensions(sum).size() == 6);
  CHECK(testing::same_up_to_renaming(direct_sum(x, LabeledPoset{}), x));
}

TEST_CASE("refinement") {
  const LabeledPoset two = antichain(2);
  const LabeledPoset r = refine(two, 0, 1);
  CHECK(r.is_chain());
  CHECK(r.less(0, 1));
  CHECK(refine(two, "p1", "p0").less(1, 0));
  CHECK_THROWS_AS(refine(two, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(refine(r, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(refine(r, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(refine(two, "p0", "zz"), std::invalid_argument);
  // both refinements of zigzag(2,1) are chains spelling 011
  const LabeledPoset z = zigzag_poset(Index{2, 1});
  const auto t1 = z.vertex("t1");
  const auto t3 = z.vertex("t3");
  for (const LabeledPoset& side : {refine(z, t1, t3), refine(z, t3, t1)}) {
    CHECK(side.is_chain());
    CHECK(extension_word(side, linear_extensions(side).front().order) == Word{0, 1, 1});
  }
}

TEST_CASE("transpose of posets") {
  const LabeledPoset t = transpose_poset(chain_poset(Index{3}));
  CHECK(t.is_chain());
  CHECK(extension_word(t, linear_extensions(t).front().order) == Word{0, 1, 1});
  CHECK(transpose_poset(LabeledPoset{}).empty());

  // zigzag(k)* has the shape of zigzag(k*), labels differing only at t1
  for (const Index& k : testing::admissible_indices(2, 7)) {
    CAPTURE(k.to_string());
    const LabeledPoset flipped = transpose_poset(zigzag_poset(k));
    const LabeledPoset other = zigzag_shape(transpose(k));
    for (std::size_t v = 0; v < flipped.size(); ++v) {
      CHECK(flipped.above(v) == other.above(v));
      if (v == 0) {
        CHECK(flipped.label(v) != other.label(v));
      } else {
        CHECK(flipped.label(v) == other.label(v));
      }
    }
  }
}

TEST_CASE("linear extensions: small cases") {
  CHECK(linear_extensions(LabeledPoset{}).size() == 1);
  CHECK(linear_extensions(antichain(4)).size() == 24);
  CHECK(linear_extensions(chain32()).size() == 1);
  // first extension takes minimal elements in ascending position
  CHECK(linear_extensions(antichain(3)).front().order == std::vector<std::size_t>{0, 1, 2});
  CHECK(count_linear_extensions(antichain(5)) == 120);
  CHECK(count_linear_extensions(LabeledPoset{}) == 1);
  // two chains of lengths 3 and 2 interleave in C(5,2) ways
  CHECK(count_linear_extensions(direct_sum(chain_poset(Index{3}), chain_poset(Index{2}))) == 10);
}

TEST_CASE("linear extensions agree with the permutation filter") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const LabeledPoset x = testing::random_poset(rng, n, 0.3, trial % 2 == 0);
    const auto exts = linear_extensions(x);
    const auto brute = testing::brute_extensions(x);
    const auto unique = as_set(exts);
    CHECK(unique.size() == exts.size());
    CHECK(unique == std::set<std::vector<std::size_t>>(brute.begin(), brute.end()));
    CHECK(count_linear_extensions(x) == static_cast<unsigned long>(brute.size()));
  }
}

TEST_CASE("refinement splits the extensions") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const LabeledPoset x = testing::random_poset(rng, 6, 0.25);
    for (auto [a, b] : testing::incomparable_pairs(x)) {
      CHECK(testing::brute_extensions(x).size() ==
            testing::brute_extensions(refine(x, a, b)).size() +
                testing::brute_extensions(refine(x, b, a)).size());
    }
  }
}

TEST_CASE("structural invariants on random posets") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const LabeledPoset x = testing::random_poset(rng, 2 + trial % 7, 0.35);
    REQUIRE(is_admissible(x));
    const LabeledPoset t = transpose_poset(x);
    CHECK(transpose_poset(t) == x);
    CHECK(t.depth() == x.size() - x.depth());
    CHECK(is_admissible(t));
    CHECK(is_admissible(direct_sum(x, t)));
    for (auto [a, b] : testing::incomparable_pairs(x)) {
      CHECK(is_admissible(refine(x, a, b)));
    }
    // extensions of X* are reversed extensions of X
    for (const auto& e : linear_extensions(x)) {
      std::vector<std::size_t> rev(e.order.rbegin(), e.order.rend());
      CHECK(extension_word(t, rev) == extension_word(x, e.order).reversed().complemented());
    }
  }
}

TEST_CASE("restriction and lookups") {
  const LabeledPoset x = chain32();
  const LabeledPoset top = restrict_to(x, (1u << 3) | (1u << 4));
  CHECK(top.ids() == std::vector<std::string>{"d", "e"});
  CHECK(top.less(0, 1));
  CHECK(!x.find("zz").has_value());
  CHECK_THROWS_AS(x.vertex("zz"), std::invalid_argument);
}
