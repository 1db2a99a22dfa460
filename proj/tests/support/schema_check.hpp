#pragma once

// Structural validator for the subset of JSON Schema the committed schemas
// use: type, properties, required, items, enum, pattern.

#include <regex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace testsupport {

using nlohmann::json;

inline void validate_schema(const json& schema, const json& value, const std::string& path,
                            std::vector<std::string>& violations) {
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        bool ok = (type == "object" && value.is_object()) ||
                  (type == "array" && value.is_array()) ||
                  (type == "string" && value.is_string()) ||
                  (type == "integer" && value.is_number_integer()) ||
                  (type == "number" && value.is_number()) ||
                  (type == "boolean" && value.is_boolean());
        if (!ok) {
            violations.push_back(path + ": expected " + type + ", got " +
                                 std::string(value.type_name()));
            return;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& candidate : schema["enum"])
            if (candidate == value) found = true;
        if (!found) violations.push_back(path + ": value not in enum");
    }
    if (schema.contains("pattern") && value.is_string()) {
        const std::regex re(schema["pattern"].get<std::string>());
        if (!std::regex_match(value.get<std::string>(), re))
            violations.push_back(path + ": '" + value.get<std::string>() +
                                 "' fails pattern " + schema["pattern"].get<std::string>());
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    violations.push_back(path + ": missing required key '" +
                                         key.get<std::string>() + "'");
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema["properties"].items())
                if (value.contains(key))
                    validate_schema(sub, value.at(key), path + "." + key, violations);
    }
    if (value.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const auto& item : value)
            validate_schema(schema["items"], item, path + "[" + std::to_string(i++) + "]",
                            violations);
    }
}

inline std::vector<std::string> schema_violations(const json& schema, const json& value) {
    std::vector<std::string> violations;
    validate_schema(schema, value, "$", violations);
    return violations;
}

}  // namespace testsupport
