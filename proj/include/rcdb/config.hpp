#pragma once

#include <string>

#include "rcdb/harness.hpp"

namespace rcdb {

// Parses and schema-validates the JSON config document, filling defaults.
// Unknown keys anywhere in the document raise ConfigError.
RunConfig parse_config_text(const std::string& json_text);
RunConfig load_config(const std::string& path);

// Effective config with all defaults resolved, round-trippable through
// parse_config_text.
std::string resolved_config_json(const RunConfig& cfg);

AttackKind attack_kind_from_string(const std::string& s);
std::string attack_kind_name(AttackKind k);

}  // namespace rcdb
