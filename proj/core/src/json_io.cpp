#include "hyperforge/json_io.hpp"

#include <json.hpp>

namespace hyperforge {

using nlohmann::json;

std::string structure_to_json(const Structure& s, int indent) {
  json j;
  j["name"] = s.name;
  j["elements"] = s.labels;
  j["zero"] = s.label_of(s.zero);
  j["one"] = s.label_of(s.one);
  j["kind"] = kind_name(s.declared);
  json neg = json::object();
  for (int a = 0; a < s.size; ++a) neg[s.label_of(a)] = s.label_of(s.neg_of(a));
  j["neg"] = neg;
  auto table = [&](const std::vector<ElemSet>& cells) {
    json t = json::object();
    for (int a = 0; a < s.size; ++a)
      for (int b = a; b < s.size; ++b) {
        std::vector<std::string> members;
        cells[static_cast<size_t>(a) * s.size + b].for_each(
            [&](int x) { members.push_back(s.label_of(x)); });
        t[s.label_of(a) + "|" + s.label_of(b)] = members;
      }
    return t;
  };
  j["add"] = table(s.add_cells);
  j["mul"] = table(s.mul_cells);
  return j.dump(indent);
}

Structure structure_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  auto need = [&](const char* key) -> const json& {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
  };

  std::vector<std::string> labels;
  for (const auto& e : need("elements")) {
    if (!e.is_string()) throw ParseError("elements must be strings");
    labels.push_back(e.get<std::string>());
  }
  if (labels.empty()) throw ParseError("empty carrier");

  auto find_label = [&](const std::string& l) -> int {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<int>(i);
    throw ParseError("unknown element '" + l + "'");
  };

  Structure s = make_blank(j.value("name", std::string("structure")), labels,
                           find_label(need("zero").get<std::string>()),
                           find_label(need("one").get<std::string>()));
  if (j.contains("kind")) {
    auto k = parse_kind(j.at("kind").get<std::string>());
    if (!k) throw ParseError("unknown kind '" + j.at("kind").get<std::string>() + "'");
    s.declared = *k;
  }

  const json& neg = need("neg");
  if (!neg.is_object()) throw ParseError("neg must be an object");
  for (auto& [key, val] : neg.items())
    s.neg[static_cast<size_t>(find_label(key))] = find_label(val.get<std::string>());
  for (int a = 0; a < s.size; ++a)
    if (s.neg_of(s.neg_of(a)) != a)
      throw ParseError("neg is not an involution at '" + s.label_of(a) + "'");

  auto load_table = [&](const char* key, std::vector<ElemSet>& cells) {
    const json& t = need(key);
    if (!t.is_object()) throw ParseError(std::string(key) + " must be an object");
    std::vector<bool> set(static_cast<size_t>(s.size) * s.size, false);
    for (auto& [cell_key, members] : t.items()) {
      auto bar = cell_key.find('|');
      if (bar == std::string::npos)
        throw ParseError("cell key '" + cell_key + "' lacks 'a|b' form");
      int a = find_label(cell_key.substr(0, bar));
      int b = find_label(cell_key.substr(bar + 1));
      ElemSet cell(s.size);
      for (const auto& m : members) cell.insert(find_label(m.get<std::string>()));
      if (cell.empty())
        throw ParseError("empty cell '" + cell_key + "' violates totality");
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        size_t idx = static_cast<size_t>(x) * s.size + y;
        if (set[idx] && cells[idx] != cell)
          throw ParseError("conflicting symmetric entries for cell '" + cell_key + "'");
        cells[idx] = cell;
        set[idx] = true;
      }
    }
    for (size_t idx = 0; idx < set.size(); ++idx)
      if (!set[idx]) {
        int a = static_cast<int>(idx) / s.size, b = static_cast<int>(idx) % s.size;
        throw ParseError(std::string("missing ") + key + " cell '" + s.label_of(a) +
                         "|" + s.label_of(b) + "'");
      }
  };
  load_table("add", s.add_cells);
  load_table("mul", s.mul_cells);

  Report wf = validate_structure(s);
  if (!wf.passed())
    throw ParseError("structure ill-formed: " + wf.violations.front().axiom);
  return s;
}

}  // namespace hyperforge
