#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pz {

/// A finite sequence (k1, ..., kn) of positive integers. The empty index is a
/// valid value (weight 0, depth 0) and stands for the constant 1.
class Index {
public:
  Index() = default;
  explicit Index(std::vector<unsigned> parts);
  Index(std::initializer_list<unsigned> parts);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  unsigned operator[](std::size_t i) const { return parts_[i]; }
  std::size_t depth() const noexcept { return parts_.size(); }
  unsigned weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// Empty, or leading part >= 2 (the convergent MZV indices).
  bool is_admissible() const noexcept;

  /// "k1,k2,...,kn"; the empty index prints as "".
  std::string to_string() const;

  auto operator<=>(const Index&) const = default;

private:
  std::vector<unsigned> parts_;
};

/// Sorted subset of {0, ..., |k|-1}: A(k) (the proper partial sums) or J(k).
struct PartialSumSet {
  std::vector<unsigned> elements;

  bool contains(unsigned value) const;
  bool operator==(const PartialSumSet&) const = default;
};

/// Letters over {0,1} read from the largest integration variable down to the
/// smallest: 0 stands for dt/t and 1 for dt/(1-t).
class Word {
public:
  using Letter = std::uint8_t;

  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<int> letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::size_t count_ones() const noexcept;

  /// Empty, or starts with 0 and ends with 1.
  bool is_admissible() const noexcept;

  Word reversed() const;
  Word complemented() const;
  Word concat(const Word& tail) const;

  /// "00101"
  std::string to_string() const;

  auto operator<=>(const Word&) const = default;

private:
  std::vector<Letter> letters_;
};

unsigned weight(const Index& k);
std::size_t depth(const Index& k);

/// A(k) = {k1, k1+k2, ..., k1+...+k_{n-1}}. Requires k nonempty.
PartialSumSet partial_sum_set(const Index& k);

/// J(k) = A(k) with 0 adjoined.
PartialSumSet extended_partial_sum_set(const Index& k);

/// Inverse of partial_sum_set: the index of the given weight whose A-set is `cuts`.
Index index_from_partial_sums(unsigned weight, const PartialSumSet& cuts);

/// k* with A(k*) the complement of A(k) in {1, ..., |k|-1}.
Index transpose(const Index& k);

/// delta(j) for j = 1..|k|, stored at position j-1: 1 iff j-1 lies in J(k).
std::vector<Word::Letter> delta_map(const Index& k);

/// 0^{k1-1} 1 0^{k2-1} 1 ... 0^{kn-1} 1. Rejects non-admissible indices.
Word index_to_word(const Index& k);

/// Inverse of index_to_word. Rejects non-admissible words.
Index word_to_index(const Word& w);

/// Reads a word of any shape as an index: the number of letters up to and
/// including each 1. Requires the word to end in 1 (or be empty).
Index word_to_index_unchecked(const Word& w);

/// Duality partner: reverse and complement the word.
Index dual_index(const Index& k);

} // namespace pz
