// Copyright 2026 The conjtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Validator for the JSON Schema subset used by the report schema: type,
// enum, required, properties, additionalProperties, propertyNames, items,
// minItems, uniqueItems, minimum, maximum, minLength, pattern, oneOf and
// local "#/$defs/..." references.

#pragma once

#include <regex>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace schema_check {

using nlohmann::json;

class Validator {
 public:
  explicit Validator(json root) : root_(std::move(root)) {}

  /// Violations as "path: message"; empty when the document conforms.
  std::vector<std::string> validate(const json& doc) const {
    std::vector<std::string> errors;
    check(root_, doc, "$", errors);
    return errors;
  }

 private:
  const json& resolve(const json& schema) const {
    const std::string ref = schema.at("$ref");
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0)
      throw std::runtime_error("unsupported $ref " + ref);
    return root_.at("$defs").at(ref.substr(prefix.size()));
  }

  static bool has_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    throw std::runtime_error("unknown type " + t);
  }

  void check(const json& schema, const json& v, const std::string& path,
             std::vector<std::string>& errors) const {
    if (schema.is_boolean()) {
      if (!schema.get<bool>()) errors.push_back(path + ": not allowed");
      return;
    }
    if (schema.contains("$ref")) {
      check(resolve(schema), v, path, errors);
      return;
    }
    if (schema.contains("type")) {
      const auto& t = schema["type"];
      bool ok = false;
      if (t.is_string()) {
        ok = has_type(v, t);
      } else {
        for (const auto& x : t) ok = ok || has_type(v, x);
      }
      if (!ok) {
        errors.push_back(path + ": wrong type, expected " + t.dump());
        return;
      }
    }
    if (schema.contains("enum")) {
      bool found = false;
      for (const auto& x : schema["enum"]) found = found || x == v;
      if (!found) errors.push_back(path + ": value not in enum");
    }
    if (schema.contains("oneOf")) {
      int matches = 0;
      for (const auto& alt : schema["oneOf"]) {
        std::vector<std::string> sub;
        check(alt, v, path, sub);
        matches += sub.empty();
      }
      if (matches != 1)
        errors.push_back(path + ": matches " + std::to_string(matches) +
                         " oneOf alternatives");
    }
    if (v.is_number()) {
      if (schema.contains("minimum") && v.get<double>() < schema["minimum"].get<double>())
        errors.push_back(path + ": below minimum");
      if (schema.contains("maximum") && v.get<double>() > schema["maximum"].get<double>())
        errors.push_back(path + ": above maximum");
    }
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      if (schema.contains("minLength") &&
          s.size() < schema["minLength"].get<std::size_t>())
        errors.push_back(path + ": string too short");
      if (schema.contains("pattern") &&
          !std::regex_search(s, std::regex(schema["pattern"].get<std::string>())))
        errors.push_back(path + ": pattern mismatch");
    }
    if (v.is_array()) {
      if (schema.contains("minItems") &&
          v.size() < schema["minItems"].get<std::size_t>())
        errors.push_back(path + ": too few items");
      if (schema.value("uniqueItems", false)) {
        std::set<std::string> seen;
        for (const auto& x : v)
          if (!seen.insert(x.dump()).second)
            errors.push_back(path + ": duplicate items");
      }
      if (schema.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i)
          check(schema["items"], v[i], path + "[" + std::to_string(i) + "]",
                errors);
    }
    if (v.is_object()) {
      if (schema.contains("required"))
        for (const auto& key : schema["required"])
          if (!v.contains(key.get<std::string>()))
            errors.push_back(path + ": missing " + key.get<std::string>());
      const json props = schema.value("properties", json::object());
      for (const auto& [key, value] : v.items()) {
        const std::string sub = path + "." + key;
        if (schema.contains("propertyNames"))
          check(schema["propertyNames"], key, sub + " (name)", errors);
        if (props.contains(key))
          check(props[key], value, sub, errors);
        else if (schema.contains("additionalProperties"))
          check(schema["additionalProperties"], value, sub, errors);
      }
    }
  }

  json root_;
};

}  // namespace schema_check
