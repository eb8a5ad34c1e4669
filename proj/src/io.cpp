#include "posetzeta/io.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>

namespace pz {

using json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

json poset_json(const LabeledPoset& x, const std::vector<std::string>& names) {
  json vertices = json::array();
  json labels = json::object();
  for (std::size_t v = 0; v < x.size(); ++v) {
    vertices.push_back(names[v]);
    labels[names[v]] = static_cast<int>(x.label(v));
  }
  json covers = json::array();
  for (auto [a, b] : x.covers()) {
    covers.push_back(json::array({names[a], names[b]}));
  }
  return json{{"vertices", vertices}, {"covers", covers}, {"labels", labels}};
}

} // namespace

Index parse_index(const std::string& text) {
  const std::string body = trim(text);
  if (body.empty()) {
    throw ParseError("empty index");
  }
  std::vector<unsigned> parts;
  std::stringstream stream(body);
  std::string token;
  while (std::getline(stream, token, ',')) {
    token = trim(token);
    long value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (token.empty() || ec != std::errc() || ptr != end) {
      throw ParseError("malformed index part '" + token + "'");
    }
    if (value <= 0) {
      throw ParseError("index parts must be positive integers, got " + token);
    }
    parts.push_back(static_cast<unsigned>(value));
  }
  if (body.back() == ',') {
    throw ParseError("malformed index part ''");
  }
  return Index(std::move(parts));
}

Word parse_word(const std::string& text) {
  std::vector<Word::Letter> letters;
  for (char c : trim(text)) {
    if (c != '0' && c != '1') {
      throw ParseError(std::string("word letters must be 0 or 1, got '") + c + "'");
    }
    letters.push_back(static_cast<Word::Letter>(c - '0'));
  }
  return Word(std::move(letters));
}

LabeledPoset parse_poset(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("poset file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("covers") ||
      !doc.contains("labels")) {
    throw ParseError("poset file needs \"vertices\", \"covers\" and \"labels\"");
  }
  const json& jv = doc["vertices"];
  const json& jc = doc["covers"];
  const json& jl = doc["labels"];
  if (!jv.is_array() || !jc.is_array() || !jl.is_object()) {
    throw ParseError("poset file: vertices and covers must be arrays, labels an object");
  }
  std::vector<std::string> vertices;
  for (const auto& v : jv) {
    if (!v.is_string()) {
      throw ParseError("poset file: vertex ids must be strings");
    }
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : jc) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
      throw ParseError("poset file: each cover must be a pair of vertex ids");
    }
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  std::map<std::string, int> labels;
  for (const auto& [id, value] : jl.items()) {
    if (!value.is_number_integer()) {
      throw ParseError("poset file: label of '" + id + "' must be 0 or 1");
    }
    labels[id] = value.get<int>();
  }
  try {
    return from_covers(vertices, covers, labels);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("poset file: ") + e.what());
  }
}

std::string poset_to_json(const LabeledPoset& x) {
  return poset_json(x, x.ids()).dump();
}

std::string dot_sidecar_json(const LabeledPoset& x) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < x.size(); ++v) {
    names.push_back("n" + std::to_string(v));
  }
  return poset_json(x, names).dump();
}

std::string combination_to_json(const ZetaCombination& c) {
  json out = json::array();
  for (const auto& [k, coeff] : c.terms()) {
    out.push_back(json{{"index", k.parts()}, {"coeff", to_fraction_string(coeff)}});
  }
  return out.dump();
}

ZetaCombination parse_combination(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("combination is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw ParseError("combination must be a JSON array");
  }
  ZetaCombination out;
  for (const auto& term : doc) {
    if (!term.is_object() || !term.contains("index") || !term.contains("coeff") ||
        !term["index"].is_array()) {
      throw ParseError("combination terms need an \"index\" array and a \"coeff\"");
    }
    std::vector<unsigned> parts;
    for (const auto& p : term["index"]) {
      if (!p.is_number_integer() || p.get<long>() <= 0) {
        throw ParseError("combination index parts must be positive integers");
      }
      parts.push_back(p.get<unsigned>());
    }
    Rational coeff;
    if (term["coeff"].is_string()) {
      try {
        coeff = parse_rational(term["coeff"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    } else if (term["coeff"].is_number_integer()) {
      coeff = Rational(term["coeff"].get<long>());
    } else {
      throw ParseError("combination coefficients must be \"p/q\" strings or integers");
    }
    Index k(std::move(parts));
    if (!k.is_admissible()) {
      throw ParseError("combination index " + k.to_string() + " is not admissible");
    }
    out.add(k, coeff);
  }
  return out;
}

std::string poset_to_dot(const LabeledPoset& x) {
  std::ostringstream out;
  out << "digraph poset {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle, width=0.2, fixedsize=true, label=\"\"];\n";
  for (std::size_t v = 0; v < x.size(); ++v) {
    out << "  n" << v << " [xlabel=" << json(x.id(v)).dump();
    if (x.label(v) == 1) {
      out << ", style=filled, fillcolor=black";
    }
    out << "];\n";
  }
  for (auto [a, b] : x.covers()) {
    out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace pz
