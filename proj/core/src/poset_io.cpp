#include "koszulkit/poset_io.hpp"

#include <map>
#include <sstream>

#include "json_internal.hpp"
#include "koszulkit/error.hpp"

namespace koszulkit {

namespace detail {

namespace {

std::vector<NamedPair> read_pairs(const nlohmann::json& j, const char* key) {
  if (!j.is_array()) throw MalformedPosetError(std::string("\"") + key + "\" must be an array");
  std::vector<NamedPair> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw MalformedPosetError(std::string("each entry of \"") + key +
                                "\" must be a two-element array of strings");
    }
    out.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return out;
}

}  // namespace

Poset poset_from_json_value(const nlohmann::json& j) {
  if (!j.is_object()) throw MalformedPosetError("poset JSON must be an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "elements" && key != "covers" && key != "relations") {
      throw MalformedPosetError("unknown key \"" + key + "\" in poset JSON");
    }
  }
  if (!j.contains("elements")) throw MalformedPosetError("poset JSON lacks \"elements\"");
  if (j.contains("covers") == j.contains("relations")) {
    throw MalformedPosetError("poset JSON needs exactly one of \"covers\" or \"relations\"");
  }
  const auto& elems = j.at("elements");
  if (!elems.is_array()) throw MalformedPosetError("\"elements\" must be an array");
  std::vector<std::string> elements;
  for (const auto& e : elems) {
    if (!e.is_string()) throw MalformedPosetError("element identifiers must be strings");
    elements.push_back(e.get<std::string>());
  }
  if (j.contains("covers")) {
    return Poset::from_covers(std::move(elements), read_pairs(j.at("covers"), "covers"));
  }
  return Poset::from_relation(std::move(elements), read_pairs(j.at("relations"), "relations"));
}

nlohmann::ordered_json poset_to_json_value(const Poset& p) {
  nlohmann::ordered_json j;
  j["elements"] = p.elements();
  auto covers = nlohmann::ordered_json::array();
  for (const auto& [a, b] : p.cover_names()) covers.push_back({a, b});
  j["covers"] = std::move(covers);
  return j;
}

}  // namespace detail

Poset poset_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedPosetError(std::string("malformed JSON: ") + e.what());
  }
  return detail::poset_from_json_value(j);
}

std::string poset_to_json(const Poset& p) { return detail::poset_to_json_value(p).dump(); }

namespace {

std::string quoted(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string poset_to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  std::map<int, std::vector<Index>> ranks;
  for (Index x = 0; x < p.size(); ++x) ranks[p.height(x)].push_back(x);
  for (const auto& [rank, xs] : ranks) {
    os << "  { rank=same;";
    for (Index x : xs) os << ' ' << quoted(p.name(x)) << ';';
    os << " }  // rank " << rank << '\n';
  }
  for (const auto& [a, b] : p.cover_names()) os << "  " << quoted(a) << " -> " << quoted(b) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace koszulkit
