// Copyright 2026 The BOOP Checker Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "boop/config.hpp"

#include <algorithm>
#include <cctype>
#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <system_error>

namespace boop {
namespace {

using nlohmann::json;

struct ConfigError {
  std::string message;
};

std::string lowercase(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return text;
}

std::vector<std::string> string_list(const json& value, std::string_view key) {
  if (!value.is_array()) throw ConfigError{fmt::format("`{}` must be an array of strings", key)};
  std::vector<std::string> out;
  for (const json& item : value) {
    if (!item.is_string()) throw ConfigError{fmt::format("`{}` must be an array of strings", key)};
    out.push_back(item.get<std::string>());
  }
  return out;
}

void apply_levels(const json& value, RuleConfig& config) {
  if (!value.is_object()) throw ConfigError{"`levels` must be an object"};
  for (const auto& [id, level] : value.items()) {
    const RuleInfo* rule = find_rule(id);
    if (rule == nullptr) throw ConfigError{fmt::format("unknown rule id `{}` in `levels`", id)};
    if (!level.is_string()) {
      throw ConfigError{fmt::format("level for `{}` must be \"error\", \"warn\" or \"off\"", id)};
    }
    std::optional<Severity> severity = severity_from_string(level.get<std::string>());
    if (!severity) {
      throw ConfigError{fmt::format("unknown severity `{}` for `{}`; expected \"error\", \"warn\" or \"off\"",
                                    level.get<std::string>(), id)};
    }
    if (!rule->configurable && *severity != rule->default_level) {
      throw ConfigError{fmt::format("rule `{}` is not configurable", id)};
    }
    config.levels[id] = *severity;
  }
}

std::vector<ProofStrategy> strategies(const json& value) {
  if (!value.is_array()) throw ConfigError{"`proof_strategies` must be an array"};
  std::vector<ProofStrategy> out;
  for (const json& item : value) {
    if (!item.is_object() || !item.contains("name") || !item["name"].is_string() ||
        !item.contains("markers")) {
      throw ConfigError{"each proof strategy needs a string `name` and a `markers` array"};
    }
    ProofStrategy strategy{item["name"].get<std::string>(), {}};
    for (std::string& marker : string_list(item["markers"], "markers")) {
      strategy.markers.push_back(lowercase(std::move(marker)));
    }
    if (strategy.markers.empty()) {
      throw ConfigError{fmt::format("proof strategy `{}` has no markers", strategy.name)};
    }
    out.push_back(std::move(strategy));
  }
  return out;
}

std::vector<SectionKind> sections(const json& value) {
  std::vector<SectionKind> out;
  for (const std::string& name : string_list(value, "required_sections")) {
    std::optional<SectionKind> kind = section_kind_from_string(name);
    if (!kind) throw ConfigError{fmt::format("unknown section `{}` in `required_sections`", name)};
    if (std::find(out.begin(), out.end(), *kind) == out.end()) out.push_back(*kind);
  }
  return out;
}

void overlay(const json& root, RuleConfig& config) {
  if (!root.is_object()) throw ConfigError{"config must be a JSON object"};
  for (const auto& [key, value] : root.items()) {
    if (key == "version") {
      if (!value.is_number_integer()) throw ConfigError{"`version` must be an integer"};
      config.version = value.get<int>();
    } else if (key == "levels") {
      apply_levels(value, config);
    } else if (key == "banned_identifier_prefixes") {
      config.banned_identifier_prefixes = string_list(value, key);
    } else if (key == "allowed_identifiers") {
      config.allowed_identifiers = string_list(value, key);
    } else if (key == "banned_operators") {
      config.banned_operators = string_list(value, key);
    } else if (key == "proof_strategies") {
      config.proof_strategies = strategies(value);
    } else if (key == "required_sections") {
      config.required_sections = sections(value);
    } else if (key == "strict_if") {
      if (!value.is_boolean()) throw ConfigError{"`strict_if` must be a boolean"};
      config.strict_if = value.get<bool>();
    } else {
      throw ConfigError{fmt::format("unknown config key `{}`", key)};
    }
  }
}

}  // namespace

Severity RuleConfig::level(std::string_view rule_id) const {
  if (auto it = levels.find(rule_id); it != levels.end()) return it->second;
  const RuleInfo* rule = find_rule(rule_id);
  return rule ? rule->default_level : Severity::Error;
}

bool RuleConfig::is_allowed(std::string_view identifier) const {
  return std::find(allowed_identifiers.begin(), allowed_identifiers.end(), identifier) !=
         allowed_identifiers.end();
}

RuleConfig default_config() {
  RuleConfig config;
  for (const RuleInfo& rule : rule_catalog()) config.levels.emplace(std::string(rule.id), rule.default_level);
  config.banned_identifier_prefixes = {"List.", "Array.", "String.", "Hashtbl."};
  config.allowed_identifiers = {"failwith", "ref", "not"};
  config.proof_strategies = {
      {"induction", {"base case", "inductive hypothesis", "inductive step"}},
      {"invariant", {"initialization", "maintenance", "termination"}},
  };
  config.required_sections.assign(kAllSectionKinds.begin(), kAllSectionKinds.end());
  return config;
}

ConfigResult load_config(std::string_view text) {
  ConfigResult result{default_config(), std::nullopt};
  if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) {
    return result;
  }
  json root = json::parse(text, nullptr, /*allow_exceptions=*/false);
  try {
    if (root.is_discarded()) throw ConfigError{"config is not valid JSON"};
    overlay(root, result.config);
  } catch (const ConfigError& e) {
    result.config = default_config();
    result.error = make_diagnostic("G001", Span{0, 0}, e.message);
  }
  return result;
}

std::optional<std::filesystem::path> find_config_file(const std::filesystem::path& file) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::path dir = fs::absolute(file, ec).parent_path();
  if (ec) return std::nullopt;
  while (true) {
    fs::path candidate = dir / kConfigFileName;
    if (fs::is_regular_file(candidate, ec)) return candidate;
    if (!dir.has_parent_path() || dir.parent_path() == dir) return std::nullopt;
    dir = dir.parent_path();
  }
}

}  // namespace boop
