// Minimal JSON-Schema checker covering the subset the shipped schemas use:
// type (string or list), required, properties, additionalProperties
// (boolean or schema), items, enum. Enough to validate every CLI output
// document against its published schema.
#pragma once

#include <string>

#include "json.hpp"

namespace schema {

inline bool type_matches(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

inline bool validate(const nlohmann::json& value, const nlohmann::json& spec,
                     std::string* error) {
  auto fail = [&](const std::string& why) {
    if (error) *error = why;
    return false;
  };

  if (spec.contains("type")) {
    const auto& t = spec["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else {
      for (const auto& alt : t)
        if (type_matches(value, alt.get<std::string>())) ok = true;
    }
    if (!ok) return fail("type mismatch against " + t.dump() + " for " + value.dump());
  }

  if (spec.contains("enum")) {
    bool ok = false;
    for (const auto& alt : spec["enum"])
      if (alt == value) ok = true;
    if (!ok) return fail("value " + value.dump() + " not in enum");
  }

  if (value.is_object()) {
    if (spec.contains("required"))
      for (const auto& key : spec["required"])
        if (!value.contains(key.get<std::string>()))
          return fail("missing required key " + key.get<std::string>());
    const auto& props = spec.contains("properties") ? spec["properties"]
                                                    : nlohmann::json::object();
    for (const auto& [key, sub] : value.items()) {
      if (props.contains(key)) {
        if (!validate(sub, props[key], error)) return false;
      } else if (spec.contains("additionalProperties")) {
        const auto& extra = spec["additionalProperties"];
        if (extra.is_boolean()) {
          if (!extra.get<bool>()) return fail("unexpected key " + key);
        } else if (!validate(sub, extra, error)) {
          return false;
        }
      }
    }
  }

  if (value.is_array() && spec.contains("items")) {
    for (const auto& item : value)
      if (!validate(item, spec["items"], error)) return false;
  }

  return true;
}

}  // namespace schema
