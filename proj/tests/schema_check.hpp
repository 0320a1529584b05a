#pragma once

// Just enough of JSON Schema (type / properties / required / items / enum)
// to validate the CLI outputs against the schemas shipped in schemas/.

#include <fstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  throw std::runtime_error("unsupported schema type: " + type);
}

inline void validate(const json& value, const json& schema,
                     const std::string& where = "$") {
  if (schema.contains("type") &&
      !type_matches(value, schema["type"].get<std::string>()))
    throw std::runtime_error(where + ": expected " +
                             schema["type"].get<std::string>());
  if (schema.contains("enum")) {
    bool hit = false;
    for (const json& e : schema["enum"]) hit = hit || e == value;
    if (!hit) throw std::runtime_error(where + ": not in enum");
  }
  if (schema.contains("required"))
    for (const json& key : schema["required"])
      if (!value.contains(key.get<std::string>()))
        throw std::runtime_error(where + ": missing " + key.get<std::string>());
  if (schema.contains("properties") && value.is_object())
    for (auto& [key, sub] : schema["properties"].items())
      if (value.contains(key)) validate(value[key], sub, where + "." + key);
  if (schema.contains("items") && value.is_array())
    for (std::size_t i = 0; i < value.size(); ++i)
      validate(value[i], schema["items"], where + "[" + std::to_string(i) + "]");
}

inline json load_schema(const std::string& name) {
  std::ifstream in(std::string(SCHEMA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("schema not found: " + name);
  return json::parse(in);
}

}  // namespace schema_check
