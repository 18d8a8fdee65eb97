#include "mvlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>

#include "mvlab/error.hpp"

namespace mvlab {

using nlohmann::json;

namespace {

TruthValue value_from(const json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where + ": expected a value name");
  auto v = TruthValue::parse(j.get<std::string>());
  if (!v) throw ConfigError(where + ": unknown value '" + j.get<std::string>() + "'");
  return *v;
}

std::vector<TruthValue> values_from(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError(where + ": expected an array of value names");
  std::vector<TruthValue> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(value_from(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

template <typename T>
T field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + ": missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + ": field '" + key + "' has the wrong type");
  }
}

Connective connective_from(const json& c, const std::vector<TruthValue>& values, const std::string& where) {
  if (!c.is_object()) throw ConfigError(where + ": expected an object");
  const auto name = field<std::string>(c, "name", where);
  const std::string at = where + " (" + name + ")";
  const auto arity = field<int>(c, "arity", at);
  Notation n;
  n.symbol = field<std::string>(c, "symbol", at);
  const auto fixity = c.value("fixity", arity == 1 ? std::string("prefix") : std::string("infix"));
  if (fixity == "prefix") {
    n.fixity = Fixity::prefix;
  } else if (fixity == "infix") {
    n.fixity = Fixity::infix;
  } else {
    throw ConfigError(at + ": fixity must be 'prefix' or 'infix'");
  }
  n.precedence = c.value("precedence", 0);
  const auto assoc = c.value("assoc", std::string("left"));
  if (assoc == "left") {
    n.assoc = Assoc::left;
  } else if (assoc == "none") {
    n.assoc = Assoc::none;
  } else {
    throw ConfigError(at + ": assoc must be 'left' or 'none'");
  }
  if (n.fixity == Fixity::infix && n.precedence < 1) throw ConfigError(at + ": infix precedence must be >= 1");

  if (!c.contains("table")) throw ConfigError(at + ": missing field 'table'");
  const json& t = c.at("table");
  std::vector<TruthValue> table;
  if (arity == 1) {
    table = values_from(t, at + ".table");
  } else if (arity == 2) {
    if (!t.is_array() || t.size() != values.size()) {
      throw ConfigError(at + ".table: expected " + std::to_string(values.size()) + " rows");
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto row = values_from(t[i], at + ".table[" + std::to_string(i) + "]");
      if (row.size() != values.size()) {
        throw ConfigError(at + ".table[" + std::to_string(i) + "]: expected " + std::to_string(values.size()) +
                          " entries");
      }
      table.insert(table.end(), row.begin(), row.end());
    }
  } else {
    throw ConfigError(at + ": arity must be 1 or 2");
  }
  try {
    return Connective(name, n, arity, values, std::move(table));
  } catch (const SemanticError& e) {
    throw ConfigError(at + ": " + e.what());
  }
}

}  // namespace

Logic logic_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("logic file: expected a JSON object");
  if (doc.contains("format") && doc.at("format") != kLogicFormat) {
    throw ConfigError("logic file: format must be '" + std::string(kLogicFormat) + "'");
  }
  if (doc.contains("version") && doc.at("version") != kLogicFormatVersion) {
    throw ConfigError("logic file: unsupported version");
  }
  const auto name = field<std::string>(doc, "name", "logic");
  if (!doc.contains("values")) throw ConfigError(name + ": missing field 'values'");
  const auto values = values_from(doc.at("values"), name + ".values");
  // Without a designated list, the values containing 1 are designated.
  std::vector<TruthValue> designated;
  if (doc.contains("designated")) {
    designated = values_from(doc.at("designated"), name + ".designated");
  } else {
    for (TruthValue v : values) {
      if (v.has_true()) designated.push_back(v);
    }
  }
  std::vector<Connective> signature;
  const json connectives = doc.value("connectives", json::array());
  if (!connectives.is_array()) throw ConfigError(name + ".connectives: expected an array");
  for (std::size_t i = 0; i < connectives.size(); ++i) {
    signature.push_back(connective_from(connectives[i], values, name + ".connectives[" + std::to_string(i) + "]"));
  }
  try {
    return Logic(name, values, designated, std::move(signature));
  } catch (const SemanticError& e) {
    throw ConfigError(e.what());
  }
}

json logic_to_json(const Logic& logic) {
  auto names = [](const std::vector<TruthValue>& vs) {
    json a = json::array();
    for (TruthValue v : vs) a.push_back(std::string(1, v.name()));
    return a;
  };
  json conns = json::array();
  for (const Connective& c : logic.signature()) {
    json entry{{"name", c.name()},
               {"symbol", c.symbol()},
               {"arity", c.arity()},
               {"fixity", c.notation().fixity == Fixity::prefix ? "prefix" : "infix"}};
    if (c.notation().fixity == Fixity::infix) {
      entry["precedence"] = c.notation().precedence;
      entry["assoc"] = c.notation().assoc == Assoc::none ? "none" : "left";
    }
    if (c.arity() == 1) {
      entry["table"] = names(c.table());
    } else {
      json rows = json::array();
      const std::size_t k = logic.values().size();
      for (std::size_t i = 0; i < k; ++i) {
        rows.push_back(names(std::vector<TruthValue>(c.table().begin() + static_cast<long>(i * k),
                                                     c.table().begin() + static_cast<long>((i + 1) * k))));
      }
      entry["table"] = rows;
    }
    conns.push_back(entry);
  }
  return json{{"format", kLogicFormat},      {"version", kLogicFormatVersion},
              {"name", logic.name()},        {"values", names(logic.values())},
              {"designated", names(logic.designated())}, {"connectives", conns}};
}

std::string logic_to_text(const Logic& logic) {
  const json doc = logic_to_json(logic);
  auto str = [](const json& j) { return j.dump(); };
  auto list = [&](const json& arr) {
    std::string s = "[";
    for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? ", " : "") + str(arr[i]);
    return s + "]";
  };
  std::string out = "{\n";
  out += "  \"format\": " + str(doc["format"]) + ",\n";
  out += "  \"version\": " + str(doc["version"]) + ",\n";
  out += "  \"name\": " + str(doc["name"]) + ",\n";
  out += "  \"values\": " + list(doc["values"]) + ",\n";
  out += "  \"designated\": " + list(doc["designated"]) + ",\n";
  out += "  \"connectives\": [";
  const json& conns = doc["connectives"];
  for (std::size_t i = 0; i < conns.size(); ++i) {
    const json& c = conns[i];
    out += i ? ",\n    {" : "\n    {";
    out += "\"name\": " + str(c["name"]) + ", \"symbol\": " + str(c["symbol"]) + ", \"arity\": " + str(c["arity"]) +
           ", \"fixity\": " + str(c["fixity"]);
    if (c.contains("precedence")) {
      out += ", \"precedence\": " + str(c["precedence"]) + ", \"assoc\": " + str(c["assoc"]);
    }
    out += ",\n     \"table\": ";
    if (c["arity"] == 1) {
      out += list(c["table"]);
    } else {
      out += "[";
      for (std::size_t r = 0; r < c["table"].size(); ++r) out += (r ? ",\n               " : "") + list(c["table"][r]);
      out += "]";
    }
    out += "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

Logic load_logic_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open logic file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
  return logic_from_json(doc);
}

Logic resolve_logic(std::string_view ref, const std::vector<Logic>& registry) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
  };
  for (const Logic& l : registry) {
    if (lower(l.name()) == lower(ref)) return l;
  }
  if (std::filesystem::exists(std::string(ref))) return load_logic_file(std::string(ref));
  throw ConfigError("unknown logic '" + std::string(ref) + "' (not a builtin name or an existing file)");
}

}  // namespace mvlab
