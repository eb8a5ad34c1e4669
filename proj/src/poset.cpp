#include "posetzeta/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace pz {

namespace {

using Mask = LabeledPoset::Mask;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

} // namespace

LabeledPoset::LabeledPoset(std::vector<std::string> ids, std::vector<Label> labels,
                           const std::vector<std::pair<std::size_t, std::size_t>>& less)
    : ids_(std::move(ids)), labels_(std::move(labels)) {
  if (ids_.size() > max_vertices) {
    throw std::invalid_argument("poset has more than 64 vertices");
  }
  if (labels_.size() != ids_.size()) {
    throw std::invalid_argument("every vertex needs exactly one label");
  }
  for (Label c : labels_) {
    if (c > 1) {
      throw std::invalid_argument("labels must be 0 or 1");
    }
  }
  std::set<std::string> seen;
  for (const auto& id : ids_) {
    if (!seen.insert(id).second) {
      throw std::invalid_argument("duplicate vertex id '" + id + "'");
    }
  }
  up_.assign(ids_.size(), 0);
  for (auto [a, b] : less) {
    if (a >= ids_.size() || b >= ids_.size()) {
      throw std::invalid_argument("relation refers to a vertex out of range");
    }
    up_[a] |= bit(b);
  }
  close();
}

void LabeledPoset::close() {
  const std::size_t n = ids_.size();
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up_[i] & bit(k)) {
        up_[i] |= up_[k];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (up_[i] & bit(i)) {
      throw std::invalid_argument("order relation has a cycle through '" + ids_[i] + "'");
    }
  }
  down_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (up_[i] & bit(j)) {
        down_[j] |= bit(i);
      }
    }
  }
}

std::size_t LabeledPoset::depth() const noexcept {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), Label{1}));
}

std::optional<std::size_t> LabeledPoset::find(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t LabeledPoset::vertex(const std::string& id) const {
  if (auto v = find(id)) {
    return *v;
  }
  throw std::invalid_argument("unknown vertex '" + id + "'");
}

Mask LabeledPoset::all() const noexcept {
  return size() == 64 ? ~Mask{0} : bit(size()) - 1;
}

Mask LabeledPoset::minimal() const noexcept {
  Mask out = 0;
  for (std::size_t v = 0; v < size(); ++v) {
    if (down_[v] == 0) {
      out |= bit(v);
    }
  }
  return out;
}

Mask LabeledPoset::maximal() const noexcept {
  Mask out = 0;
  for (std::size_t v = 0; v < size(); ++v) {
    if (up_[v] == 0) {
      out |= bit(v);
    }
  }
  return out;
}

bool LabeledPoset::is_admissible() const noexcept {
  for (std::size_t v = 0; v < size(); ++v) {
    if (down_[v] == 0 && labels_[v] != 1) {
      return false;
    }
    if (up_[v] == 0 && labels_[v] != 0) {
      return false;
    }
  }
  return true;
}

bool LabeledPoset::is_chain() const noexcept {
  for (std::size_t a = 0; a < size(); ++a) {
    if (std::popcount(up_[a] | down_[a]) + 1 != static_cast<int>(size())) {
      return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> LabeledPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      // b covers a: a < b with nothing strictly between.
      if (less(a, b) && (up_[a] & down_[b]) == 0) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

LabeledPoset from_covers(const std::vector<std::string>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& covers,
                         const std::map<std::string, int>& labels) {
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!position.emplace(vertices[i], i).second) {
      throw std::invalid_argument("duplicate vertex id '" + vertices[i] + "'");
    }
  }
  auto lookup = [&](const std::string& id) {
    auto it = position.find(id);
    if (it == position.end()) {
      throw std::invalid_argument("unknown vertex '" + id + "'");
    }
    return it->second;
  };
  std::vector<LabeledPoset::Label> label_row(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto it = labels.find(vertices[i]);
    if (it == labels.end()) {
      throw std::invalid_argument("missing label for vertex '" + vertices[i] + "'");
    }
    if (it->second != 0 && it->second != 1) {
      throw std::invalid_argument("label of '" + vertices[i] + "' must be 0 or 1");
    }
    label_row[i] = static_cast<LabeledPoset::Label>(it->second);
  }
  for (const auto& [id, value] : labels) {
    lookup(id);
  }
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (const auto& [a, b] : covers) {
    less.emplace_back(lookup(a), lookup(b));
  }
  return LabeledPoset(vertices, std::move(label_row), less);
}

bool is_admissible(const LabeledPoset& x) { return x.is_admissible(); }

namespace {

std::vector<std::pair<std::size_t, std::size_t>> relation_pairs(const LabeledPoset& x,
                                                                std::size_t offset = 0) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (x.less(a, b)) {
        out.emplace_back(a + offset, b + offset);
      }
    }
  }
  return out;
}

} // namespace

LabeledPoset direct_sum(const LabeledPoset& x, const LabeledPoset& y) {
  std::vector<std::string> ids;
  std::vector<LabeledPoset::Label> labels;
  for (std::size_t v = 0; v < x.size(); ++v) {
    ids.push_back("L." + x.id(v));
    labels.push_back(x.label(v));
  }
  for (std::size_t v = 0; v < y.size(); ++v) {
    ids.push_back("R." + y.id(v));
    labels.push_back(y.label(v));
  }
  auto less = relation_pairs(x);
  auto right = relation_pairs(y, x.size());
  less.insert(less.end(), right.begin(), right.end());
  return LabeledPoset(std::move(ids), std::move(labels), less);
}

LabeledPoset refine(const LabeledPoset& x, std::size_t a, std::size_t b) {
  if (a >= x.size() || b >= x.size()) {
    throw std::invalid_argument("refine: vertex out of range");
  }
  if (x.comparable(a, b)) {
    throw std::invalid_argument("refine: '" + x.id(a) + "' and '" + x.id(b) + "' are comparable");
  }
  auto less = relation_pairs(x);
  less.emplace_back(a, b);
  return LabeledPoset(x.ids(), x.labels(), less);
}

LabeledPoset refine(const LabeledPoset& x, const std::string& a, const std::string& b) {
  return refine(x, x.vertex(a), x.vertex(b));
}

LabeledPoset transpose_poset(const LabeledPoset& x) {
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (auto [a, b] : relation_pairs(x)) {
    less.emplace_back(b, a);
  }
  std::vector<LabeledPoset::Label> labels(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) {
    labels[v] = static_cast<LabeledPoset::Label>(1 - x.label(v));
  }
  return LabeledPoset(x.ids(), std::move(labels), less);
}

LabeledPoset restrict_to(const LabeledPoset& x, Mask keep) {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> new_position(x.size(), 0);
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (keep & bit(v)) {
      new_position[v] = kept.size();
      kept.push_back(v);
    }
  }
  std::vector<std::string> ids;
  std::vector<LabeledPoset::Label> labels;
  for (std::size_t v : kept) {
    ids.push_back(x.id(v));
    labels.push_back(x.label(v));
  }
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t a : kept) {
    for (std::size_t b : kept) {
      if (x.less(a, b)) {
        less.emplace_back(new_position[a], new_position[b]);
      }
    }
  }
  return LabeledPoset(std::move(ids), std::move(labels), less);
}

Word extension_word(const LabeledPoset& x, std::span<const std::size_t> bottom_up) {
  std::vector<Word::Letter> letters;
  letters.reserve(bottom_up.size());
  for (auto it = bottom_up.rbegin(); it != bottom_up.rend(); ++it) {
    letters.push_back(x.label(*it));
  }
  return Word(std::move(letters));
}

void for_each_linear_extension(const LabeledPoset& x,
                               const std::function<void(std::span<const std::size_t>)>& visit) {
  const std::size_t n = x.size();
  std::vector<std::size_t> prefix;
  prefix.reserve(n);
  std::function<void(Mask)> extend = [&](Mask placed) {
    if (prefix.size() == n) {
      visit(prefix);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if ((placed & bit(v)) == 0 && (x.below(v) & ~placed) == 0) {
        prefix.push_back(v);
        extend(placed | bit(v));
        prefix.pop_back();
      }
    }
  };
  extend(0);
}

std::vector<LinearExtension> linear_extensions(const LabeledPoset& x) {
  std::vector<LinearExtension> out;
  for_each_linear_extension(x, [&](std::span<const std::size_t> ext) {
    out.push_back(LinearExtension{{ext.begin(), ext.end()}});
  });
  return out;
}

Integer count_linear_extensions(const LabeledPoset& x) {
  const std::size_t n = x.size();
  // Layer L holds every down-set of size L with its number of bottom-up
  // orderings.
  std::unordered_map<Mask, Integer> layer{{Mask{0}, Integer(1)}};
  for (std::size_t level = 0; level < n; ++level) {
    std::unordered_map<Mask, Integer> next;
    for (const auto& [placed, ways] : layer) {
      for (std::size_t v = 0; v < n; ++v) {
        if ((placed & bit(v)) == 0 && (x.below(v) & ~placed) == 0) {
          next[placed | bit(v)] += ways;
        }
      }
    }
    layer = std::move(next);
  }
  return layer.begin()->second;
}

LabeledPoset vertical_diagram(const Index& k, const std::string& prefix) {
  // Bottom-up labels: for each part from the last to the first, a 1 then
  // (part - 1) zeros.
  std::vector<LabeledPoset::Label> labels;
  for (auto it = k.parts().rbegin(); it != k.parts().rend(); ++it) {
    labels.push_back(1);
    labels.insert(labels.end(), *it - 1, LabeledPoset::Label{0});
  }
  std::vector<std::string> ids;
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    ids.push_back(prefix + std::to_string(v + 1));
    if (v > 0) {
      less.emplace_back(v - 1, v);
    }
  }
  return LabeledPoset(std::move(ids), std::move(labels), less);
}

LabeledPoset chain_poset(const Index& k) {
  if (!k.is_admissible()) {
    throw std::invalid_argument("chain_poset: index " + k.to_string() + " is not admissible");
  }
  return vertical_diagram(k, "v");
}

LabeledPoset zigzag_shape(const Index& k) {
  if (k.empty()) {
    throw std::invalid_argument("zigzag_shape: empty index");
  }
  const unsigned w = k.weight();
  const PartialSumSet j_set = extended_partial_sum_set(k);
  const auto delta = delta_map(k);
  std::vector<std::string> ids;
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (unsigned j = 1; j <= w; ++j) {
    ids.push_back("t" + std::to_string(j));
    if (j < w) {
      if (j_set.contains(j)) {
        less.emplace_back(j, j - 1);
      } else {
        less.emplace_back(j - 1, j);
      }
    }
  }
  return LabeledPoset(std::move(ids), delta, less);
}

LabeledPoset zigzag_poset(const Index& k) {
  if (k.empty() || !k.is_admissible()) {
    throw std::invalid_argument("zigzag_poset: index " + k.to_string() + " is not admissible");
  }
  return zigzag_shape(k);
}

} // namespace pz
