#include "posetzeta/index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pz {

Index::Index(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned p : parts_) {
    if (p == 0) {
      throw std::invalid_argument("index parts must be positive");
    }
  }
}

Index::Index(std::initializer_list<unsigned> parts) : Index(std::vector<unsigned>(parts)) {}

unsigned Index::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

bool Index::is_admissible() const noexcept {
  return parts_.empty() || parts_.front() >= 2;
}

std::string Index::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool PartialSumSet::contains(unsigned value) const {
  return std::binary_search(elements.begin(), elements.end(), value);
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter c : letters_) {
    if (c > 1) {
      throw std::invalid_argument("word letters must be 0 or 1");
    }
  }
}

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int c : letters) {
    if (c != 0 && c != 1) {
      throw std::invalid_argument("word letters must be 0 or 1");
    }
    letters_.push_back(static_cast<Letter>(c));
  }
}

std::size_t Word::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), Letter{1}));
}

bool Word::is_admissible() const noexcept {
  return letters_.empty() || (letters_.front() == 0 && letters_.back() == 1);
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

Word Word::complemented() const {
  std::vector<Letter> out(letters_.size());
  std::transform(letters_.begin(), letters_.end(), out.begin(),
                 [](Letter c) { return static_cast<Letter>(1 - c); });
  return Word(std::move(out));
}

Word Word::concat(const Word& tail) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter c : letters_) {
    out += static_cast<char>('0' + c);
  }
  return out;
}

unsigned weight(const Index& k) { return k.weight(); }

std::size_t depth(const Index& k) { return k.depth(); }

PartialSumSet partial_sum_set(const Index& k) {
  if (k.empty()) {
    throw std::invalid_argument("partial_sum_set: empty index");
  }
  PartialSumSet out;
  unsigned running = 0;
  for (std::size_t i = 0; i + 1 < k.depth(); ++i) {
    running += k[i];
    out.elements.push_back(running);
  }
  return out;
}

PartialSumSet extended_partial_sum_set(const Index& k) {
  PartialSumSet out = partial_sum_set(k);
  out.elements.insert(out.elements.begin(), 0u);
  return out;
}

Index index_from_partial_sums(unsigned weight, const PartialSumSet& cuts) {
  std::vector<unsigned> parts;
  unsigned previous = 0;
  for (unsigned c : cuts.elements) {
    if (c <= previous || c >= weight) {
      throw std::invalid_argument("partial sums must increase strictly inside (0, weight)");
    }
    parts.push_back(c - previous);
    previous = c;
  }
  parts.push_back(weight - previous);
  return Index(std::move(parts));
}

Index transpose(const Index& k) {
  if (k.empty()) {
    throw std::invalid_argument("transpose: the empty index has no transpose");
  }
  const unsigned w = k.weight();
  const PartialSumSet a = partial_sum_set(k);
  PartialSumSet complement;
  for (unsigned j = 1; j < w; ++j) {
    if (!a.contains(j)) {
      complement.elements.push_back(j);
    }
  }
  return index_from_partial_sums(w, complement);
}

std::vector<Word::Letter> delta_map(const Index& k) {
  const PartialSumSet j_set = extended_partial_sum_set(k);
  std::vector<Word::Letter> out(k.weight());
  for (unsigned j = 1; j <= k.weight(); ++j) {
    out[j - 1] = j_set.contains(j - 1) ? 1 : 0;
  }
  return out;
}

Word index_to_word(const Index& k) {
  if (!k.is_admissible()) {
    throw std::invalid_argument("index_to_word: index " + k.to_string() + " is not admissible");
  }
  std::vector<Word::Letter> letters;
  letters.reserve(k.weight());
  for (unsigned p : k.parts()) {
    letters.insert(letters.end(), p - 1, Word::Letter{0});
    letters.push_back(1);
  }
  return Word(std::move(letters));
}

Index word_to_index_unchecked(const Word& w) {
  if (!w.empty() && w.letters().back() != 1) {
    throw std::invalid_argument("word " + w.to_string() + " does not end in 1");
  }
  std::vector<unsigned> parts;
  unsigned run = 0;
  for (Word::Letter c : w.letters()) {
    ++run;
    if (c == 1) {
      parts.push_back(run);
      run = 0;
    }
  }
  return Index(std::move(parts));
}

Index word_to_index(const Word& w) {
  if (!w.is_admissible()) {
    throw std::invalid_argument("word_to_index: word " + w.to_string() + " is not admissible");
  }
  return word_to_index_unchecked(w);
}

Index dual_index(const Index& k) {
  return word_to_index(index_to_word(k).complemented().reversed());
}

} // namespace pz
