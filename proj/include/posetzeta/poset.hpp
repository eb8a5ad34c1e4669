#pragma once

#include "posetzeta/index.hpp"
#include "posetzeta/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pz {

/// A finite poset whose vertices carry a label in {0,1}. Vertices are
/// addressed by position (0..size-1) and carry opaque string ids. The strict
/// order is stored transitively closed, one bitmask row per vertex.
class LabeledPoset {
public:
  using Mask = std::uint64_t;
  using Label = Word::Letter;
  static constexpr std::size_t max_vertices = 64;

  LabeledPoset() = default;

  /// Builds the transitive closure of `less` (pairs (a, b) meaning a < b).
  /// Throws std::invalid_argument on a cycle, duplicate ids, or bad labels.
  LabeledPoset(std::vector<std::string> ids, std::vector<Label> labels,
               const std::vector<std::pair<std::size_t, std::size_t>>& less);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  std::size_t weight() const noexcept { return size(); }
  std::size_t depth() const noexcept;

  const std::string& id(std::size_t v) const { return ids_.at(v); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<std::size_t> find(const std::string& id) const;
  std::size_t vertex(const std::string& id) const;

  Label label(std::size_t v) const { return labels_.at(v); }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  bool less(std::size_t a, std::size_t b) const { return (up_.at(a) >> b) & 1u; }
  bool comparable(std::size_t a, std::size_t b) const { return a == b || less(a, b) || less(b, a); }
  Mask above(std::size_t v) const { return up_.at(v); }
  Mask below(std::size_t v) const { return down_.at(v); }
  Mask all() const noexcept;

  Mask minimal() const noexcept;
  Mask maximal() const noexcept;

  /// Minimal vertices labeled 1, maximal vertices labeled 0.
  bool is_admissible() const noexcept;
  bool is_chain() const noexcept;

  /// Hasse diagram edges (a, b), a covered by b, in ascending order.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  bool operator==(const LabeledPoset&) const = default;

private:
  void close();

  std::vector<std::string> ids_;
  std::vector<Label> labels_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

/// From a Hasse-style description keyed by id.
LabeledPoset from_covers(const std::vector<std::string>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& covers,
                         const std::map<std::string, int>& labels);

bool is_admissible(const LabeledPoset& x);

/// Disjoint union, no cross relations; ids prefixed with "L." and "R.".
LabeledPoset direct_sum(const LabeledPoset& x, const LabeledPoset& y);

/// X_a^b: the order generated by X and a < b. Requires a, b incomparable.
LabeledPoset refine(const LabeledPoset& x, std::size_t a, std::size_t b);
LabeledPoset refine(const LabeledPoset& x, const std::string& a, const std::string& b);

/// Reversed order, complemented labels.
LabeledPoset transpose_poset(const LabeledPoset& x);

/// Induced subposet on the vertices in `keep`, original relative order.
LabeledPoset restrict_to(const LabeledPoset& x, LabeledPoset::Mask keep);

/// A total order of all vertices, listed from the bottom up.
struct LinearExtension {
  std::vector<std::size_t> order;
  bool operator==(const LinearExtension&) const = default;
  auto operator<=>(const LinearExtension&) const = default;
};

/// Label word of an extension read from the top down.
Word extension_word(const LabeledPoset& x, std::span<const std::size_t> bottom_up);

/// Backtracks over minimal elements in ascending vertex position; the
/// callback sees each extension bottom-up. The empty poset has one extension.
void for_each_linear_extension(const LabeledPoset& x,
                               const std::function<void(std::span<const std::size_t>)>& visit);

std::vector<LinearExtension> linear_extensions(const LabeledPoset& x);

/// Number of linear extensions by dynamic programming over down-sets.
Integer count_linear_extensions(const LabeledPoset& x);

/// Chain whose top-down labels spell 0^{k1-1} 1 ... 0^{kn-1} 1 for any index
/// (no admissibility requirement). Vertex ids are prefix + "1".. bottom-up.
LabeledPoset vertical_diagram(const Index& k, const std::string& prefix = "v");

/// Totally ordered poset of an admissible index (the MZV integral).
LabeledPoset chain_poset(const Index& k);

/// Fence t1 ? t2 ? ... ? t_|k| with t_j > t_{j+1} exactly when j lies in
/// J(k), vertex j labeled delta(j). Built for any nonempty index.
LabeledPoset zigzag_shape(const Index& k);

/// zigzag_shape for an admissible index (the zeta-star integral).
LabeledPoset zigzag_poset(const Index& k);

} // namespace pz
