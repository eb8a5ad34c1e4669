#include "posetzeta/symbolic.hpp"

#include <unordered_map>
#include <vector>

namespace pz {

WordCombination to_words(const ZetaCombination& c) {
  WordCombination out;
  for (const auto& [k, coeff] : c.terms()) {
    out.add(index_to_word(k), coeff);
  }
  return out;
}

ZetaCombination to_indices(const WordCombination& c) {
  ZetaCombination out;
  for (const auto& [w, coeff] : c.terms()) {
    out.add(word_to_index(w), coeff);
  }
  return out;
}

WordCombination decompose_words(const LabeledPoset& x) {
  using Mask = LabeledPoset::Mask;
  const std::size_t n = x.size();
  // Forward over down-sets, one layer at a time. Each down-set keeps the
  // multiset of top-down words of its own orderings; placing v on top
  // prepends v's label.
  std::unordered_map<Mask, std::map<Word, Integer>> layer;
  layer[0][Word{}] = 1;
  for (std::size_t level = 0; level < n; ++level) {
    std::unordered_map<Mask, std::map<Word, Integer>> next;
    for (const auto& [placed, words] : layer) {
      for (std::size_t v = 0; v < n; ++v) {
        const Mask vbit = Mask{1} << v;
        if ((placed & vbit) != 0 || (x.below(v) & ~placed) != 0) {
          continue;
        }
        auto& target = next[placed | vbit];
        const Word head(std::vector<Word::Letter>{x.label(v)});
        for (const auto& [w, count] : words) {
          target[head.concat(w)] += count;
        }
      }
    }
    layer = std::move(next);
  }
  WordCombination out;
  for (const auto& [w, count] : layer.begin()->second) {
    out.add(w, Rational(count));
  }
  return out;
}

ZetaCombination decompose(const LabeledPoset& x) {
  if (!x.is_admissible()) {
    throw std::invalid_argument("decompose: poset is not admissible");
  }
  return to_indices(decompose_words(x));
}

WordCombination shuffle(const Word& u, const Word& v) {
  const std::size_t p = u.size();
  const std::size_t q = v.size();
  // table[i][j] = shuffle of the suffixes u[i:] and v[j:].
  std::vector<std::vector<WordCombination>> table(p + 1, std::vector<WordCombination>(q + 1));
  auto suffix = [](const Word& w, std::size_t from) {
    return Word(std::vector<Word::Letter>(w.letters().begin() + static_cast<long>(from),
                                          w.letters().end()));
  };
  for (std::size_t i = p + 1; i-- > 0;) {
    for (std::size_t j = q + 1; j-- > 0;) {
      WordCombination& cell = table[i][j];
      if (i == p) {
        cell = WordCombination::single(suffix(v, j));
        continue;
      }
      if (j == q) {
        cell = WordCombination::single(suffix(u, i));
        continue;
      }
      const Word head_u(std::vector<Word::Letter>{u[i]});
      const Word head_v(std::vector<Word::Letter>{v[j]});
      for (const auto& [w, c] : table[i + 1][j].terms()) {
        cell.add(head_u.concat(w), c);
      }
      for (const auto& [w, c] : table[i][j + 1].terms()) {
        cell.add(head_v.concat(w), c);
      }
    }
  }
  return table[0][0];
}

WordCombination shuffle_product(const WordCombination& a, const WordCombination& b) {
  WordCombination out;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      out += (cu * cv) * shuffle(u, v);
    }
  }
  return out;
}

ZetaCombination shuffle_product(const ZetaCombination& a, const ZetaCombination& b) {
  return to_indices(shuffle_product(to_words(a), to_words(b)));
}

bool product_identity_check(const LabeledPoset& x, const LabeledPoset& y) {
  return decompose(direct_sum(x, y)) == shuffle_product(decompose(x), decompose(y));
}

bool refinement_identity_check(const LabeledPoset& x, std::size_t a, std::size_t b) {
  if (!x.is_admissible()) {
    throw std::invalid_argument("refinement_identity_check: poset is not admissible");
  }
  return decompose(x) == decompose(refine(x, a, b)) + decompose(refine(x, b, a));
}

bool refinement_identity_check_words(const LabeledPoset& x, std::size_t a, std::size_t b) {
  return decompose_words(x) == decompose_words(refine(x, a, b)) + decompose_words(refine(x, b, a));
}

ZetaCombination dual_combination(const ZetaCombination& c) {
  ZetaCombination out;
  for (const auto& [k, coeff] : c.terms()) {
    out.add(dual_index(k), coeff);
  }
  return out;
}

ZetaCombination star_series_expansion(const Index& k) {
  if (k.empty() || !k.is_admissible()) {
    throw std::invalid_argument("star_series_expansion: index " + k.to_string() +
                                " is not admissible");
  }
  const std::size_t commas = k.depth() - 1;
  ZetaCombination out;
  for (unsigned long merge = 0; merge < (1ul << commas); ++merge) {
    std::vector<unsigned> parts{k[0]};
    for (std::size_t i = 1; i < k.depth(); ++i) {
      if ((merge >> (i - 1)) & 1ul) {
        parts.back() += k[i];
      } else {
        parts.push_back(k[i]);
      }
    }
    out.add(Index(std::move(parts)), 1);
  }
  return out;
}

ZetaCombination derive_star_relation(const Index& k) {
  return decompose(zigzag_poset(k)) - star_series_expansion(k);
}

bool is_homogeneous(const ZetaCombination& c, std::size_t weight, std::size_t depth) {
  for (const auto& [k, coeff] : c.terms()) {
    if (k.weight() != weight || k.depth() != depth) {
      return false;
    }
  }
  return true;
}

} // namespace pz
