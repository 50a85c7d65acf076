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

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boop/diagnostic.hpp"
#include "boop/document.hpp"

namespace boop {

inline constexpr std::string_view kConfigFileName = "boop.config.json";

/// Instructor-tunable settings for one assignment.
struct RuleConfig {
  int version = 1;
  std::map<std::string, Severity, std::less<>> levels;  // every catalog id
  std::vector<std::string> banned_identifier_prefixes;
  std::vector<std::string> allowed_identifiers;
  std::vector<std::string> banned_operators;
  std::vector<ProofStrategy> proof_strategies;
  std::vector<SectionKind> required_sections;
  bool strict_if = false;

  Severity level(std::string_view rule_id) const;
  bool enabled(std::string_view rule_id) const { return level(rule_id) != Severity::Off; }
  bool is_allowed(std::string_view identifier) const;
};

RuleConfig default_config();

struct ConfigResult {
  RuleConfig config;
  std::optional<Diagnostic> error;  // G001; `config` is the default when set
};

/// Overlays a JSON config on the defaults. Keys absent from the object keep
/// their default; arrays replace the default list; `levels` entries replace
/// one rule each. Empty or whitespace-only text yields the defaults.
ConfigResult load_config(std::string_view text);

/// Finds `boop.config.json` in the directory of `file` or the nearest
/// ancestor directory.
std::optional<std::filesystem::path> find_config_file(const std::filesystem::path& file);

}  // namespace boop
