#pragma once

#include "posetzeta/index.hpp"
#include "posetzeta/poset.hpp"
#include "posetzeta/rational.hpp"

#include <map>
#include <stdexcept>
#include <type_traits>

namespace pz {

/// Finite formal Q-linear combination of keys. Zero coefficients are never
/// stored, so equality of combinations is equality of the maps.
template <class Key>
class Combination {
public:
  using Terms = std::map<Key, Rational>;

  Combination() = default;

  static Combination single(const Key& key, const Rational& coeff = 1) {
    Combination c;
    c.add(key, coeff);
    return c;
  }

  void add(const Key& key, const Rational& coeff) {
    if constexpr (std::is_same_v<Key, Index>) {
      if (!key.is_admissible()) {
        throw std::invalid_argument("combination key " + key.to_string() + " is not admissible");
      }
    }
    if (coeff == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Combination& operator+=(const Combination& other) {
    if (&other == this) {
      return *this *= 2;
    }
    for (const auto& [key, c] : other.terms_) {
      add(key, c);
    }
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    if (&other == this) {
      terms_.clear();
      return *this;
    }
    for (const auto& [key, c] : other.terms_) {
      add(key, -c);
    }
    return *this;
  }
  Combination& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [key, c] : terms_) {
        c *= scalar;
      }
    }
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }

  bool operator==(const Combination&) const = default;

private:
  Terms terms_;
};

/// Keys are admissible indices (or the empty index, standing for 1).
using ZetaCombination = Combination<Index>;
using WordCombination = Combination<Word>;

WordCombination to_words(const ZetaCombination& c);
/// Throws if some word is not admissible.
ZetaCombination to_indices(const WordCombination& c);

/// Sum over linear extensions of the top-down label words (any poset).
WordCombination decompose_words(const LabeledPoset& x);

/// The MZV expansion of the poset integral. Requires x admissible.
ZetaCombination decompose(const LabeledPoset& x);

/// All interleavings of the two words, with multiplicity.
WordCombination shuffle(const Word& u, const Word& v);
WordCombination shuffle_product(const WordCombination& a, const WordCombination& b);
ZetaCombination shuffle_product(const ZetaCombination& a, const ZetaCombination& b);

/// decompose(X + Y) == decompose(X) shuffled with decompose(Y).
bool product_identity_check(const LabeledPoset& x, const LabeledPoset& y);

/// decompose(X) == decompose(X_a^b) + decompose(X_b^a). Requires x admissible.
bool refinement_identity_check(const LabeledPoset& x, std::size_t a, std::size_t b);
/// Same identity on label words; no admissibility requirement.
bool refinement_identity_check_words(const LabeledPoset& x, std::size_t a, std::size_t b);

/// Applies dual_index to every key.
ZetaCombination dual_combination(const ZetaCombination& c);

/// Series expansion of zeta-star: each comma becomes a comma or a plus.
ZetaCombination star_series_expansion(const Index& k);

/// decompose(zigzag_poset(k)) - star_series_expansion(k); evaluates to 0.
ZetaCombination derive_star_relation(const Index& k);

/// Every key has the given weight and depth.
bool is_homogeneous(const ZetaCombination& c, std::size_t weight, std::size_t depth);

} // namespace pz
