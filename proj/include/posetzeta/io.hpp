#pragma once

#include "posetzeta/index.hpp"
#include "posetzeta/poset.hpp"
#include "posetzeta/symbolic.hpp"

#include <stdexcept>
#include <string>

namespace pz {

/// Malformed user input (index text, JSON files).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// "2,1,2"; blanks around parts are tolerated.
Index parse_index(const std::string& text);

/// "00101"
Word parse_word(const std::string& text);

/// {"vertices":[...], "covers":[["a","b"],...], "labels":{"a":1,...}}
/// where ["a","b"] means a < b.
LabeledPoset parse_poset(const std::string& json_text);
std::string poset_to_json(const LabeledPoset& x);

/// [{"index":[3,1],"coeff":"2/1"}, ...], keys in lexicographic order.
std::string combination_to_json(const ZetaCombination& c);
ZetaCombination parse_combination(const std::string& json_text);

/// Hasse diagram in DOT; label-1 vertices filled, label-0 vertices hollow.
/// Nodes are named n0, n1, ... in vertex order, with the id as xlabel.
std::string poset_to_dot(const LabeledPoset& x);

/// The poset as poset_to_json would print it after renaming vertex i to "n<i>",
/// matching the node names of poset_to_dot.
std::string dot_sidecar_json(const LabeledPoset& x);

} // namespace pz
