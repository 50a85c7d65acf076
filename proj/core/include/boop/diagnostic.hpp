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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boop/span.hpp"

namespace boop {

enum class Severity { Error, Warn, Off };

std::string_view to_string(Severity severity);
std::optional<Severity> severity_from_string(std::string_view text);

// 1-based line and column (columns count Unicode code points).
struct Position {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const Position&, const Position&) = default;
};

struct Diagnostic {
  std::string rule_id;
  Severity severity = Severity::Error;
  Span span;
  Position start;
  Position end;
  std::string message;
  std::optional<std::string> note;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Static description of one diagnostic code.
///
/// Configurable rules may have their level changed (or turned off) through
/// `RuleConfig::levels`; the rest (lexer, parser, structural and I/O errors)
/// are always reported as errors.
struct RuleInfo {
  std::string_view id;
  std::string_view name;
  Severity default_level;
  bool configurable;
};

std::span<const RuleInfo> rule_catalog();
const RuleInfo* find_rule(std::string_view id);

/// Builds a diagnostic at the catalog's default level for `rule_id`.
Diagnostic make_diagnostic(std::string_view rule_id, Span span, std::string message,
                           std::optional<std::string> note = std::nullopt);

/// Orders by (span start, rule id); stable for equal keys.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

}  // namespace boop
