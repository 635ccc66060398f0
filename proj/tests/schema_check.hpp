#ifndef WIDTHS_TESTS_SCHEMA_CHECK_HPP
#define WIDTHS_TESTS_SCHEMA_CHECK_HPP

#include <json.hpp>
#include <string>

namespace widths::testing {

/// Validates a document against the subset of JSON Schema the shipped
/// schemas use: type / required / properties / items / enum, with "type"
/// either a string or an array of strings.
inline bool validates(const nlohmann::json& doc, const nlohmann::json& schema,
                      std::string* why = nullptr) {
  const auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (schema.contains("enum")) {
    for (const auto& v : schema["enum"]) {
      if (doc == v) return true;
    }
    return fail("value not in enum");
  }
  if (schema.contains("type")) {
    const auto matches = [&](const std::string& t) {
      if (t == "object") return doc.is_object();
      if (t == "array") return doc.is_array();
      if (t == "string") return doc.is_string();
      if (t == "number") return doc.is_number();
      if (t == "integer") return doc.is_number_integer();
      if (t == "boolean") return doc.is_boolean();
      if (t == "null") return doc.is_null();
      return false;
    };
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || matches(t);
    } else {
      ok = matches(schema["type"]);
    }
    if (!ok) return fail("type mismatch");
  }
  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!doc.contains(key.get<std::string>())) {
          return fail("missing required key " + key.get<std::string>());
        }
      }
    }
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema["properties"].items()) {
        if (doc.contains(key) && !validates(doc[key], sub, why)) {
          if (why) *why = key + ": " + *why;
          return false;
        }
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (const auto& item : doc) {
      if (!validates(item, schema["items"], why)) return false;
    }
  }
  return true;
}

}  // namespace widths::testing

#endif
