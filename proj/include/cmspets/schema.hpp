#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace cmspets {

/// Validates against the draft-07 subset used by docs/report.schema.json:
/// type, enum, required, properties, additionalProperties, items, minimum,
/// oneOf, anyOf and local "#/definitions/..." references.
/// Returns the first violation as "path: message", or nullopt.
std::optional<std::string> validate_json(const nlohmann::json& instance, const nlohmann::json& schema);

/// Semantic checks the schema cannot express: status agrees with the cases,
/// counts agree with cases and nested suites.
std::optional<std::string> check_report_consistency(const nlohmann::json& instance);

}  // namespace cmspets
