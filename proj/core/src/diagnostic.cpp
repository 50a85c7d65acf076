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

#include "boop/diagnostic.hpp"

#include <algorithm>
#include <array>

namespace boop {
namespace {

constexpr std::array kRules = {
    // I/O and configuration.
    RuleInfo{"F001", "file-unreadable", Severity::Error, false},
    RuleInfo{"G001", "malformed-config", Severity::Error, false},
    // Document structure.
    RuleInfo{"P001", "missing-section", Severity::Error, true},
    RuleInfo{"P002", "empty-section", Severity::Error, true},
    RuleInfo{"P003", "duplicate-or-out-of-order-section", Severity::Error, false},
    RuleInfo{"P004", "clause-before-function", Severity::Error, true},
    RuleInfo{"P005", "contract-without-ensures", Severity::Error, true},
    RuleInfo{"P006", "non-consecutive-step-numbers", Severity::Warn, true},
    // Code phase front end.
    RuleInfo{"X001", "unterminated-comment", Severity::Error, false},
    RuleInfo{"X002", "unterminated-string", Severity::Error, false},
    RuleInfo{"X003", "illegal-character", Severity::Error, false},
    RuleInfo{"X010", "parse-error", Severity::Error, false},
    // Code phase lint catalog.
    RuleInfo{"B001", "banned-identifier", Severity::Error, true},
    RuleInfo{"B002", "banned-operator", Severity::Error, true},
    RuleInfo{"I001", "mutation-construct", Severity::Error, true},
    RuleInfo{"I002", "imperative-loop", Severity::Error, true},
    RuleInfo{"S001", "nested-function-definition", Severity::Warn, true},
    RuleInfo{"S002", "anonymous-function", Severity::Warn, true},
    RuleInfo{"T001", "missing-type-annotation", Severity::Error, true},
    RuleInfo{"C001", "if-instead-of-match", Severity::Warn, true},
    RuleInfo{"R001", "recursion-without-rec", Severity::Error, true},
    RuleInfo{"U001", "unknown-identifier", Severity::Warn, true},
    // Cross-phase links.
    RuleInfo{"L001", "contract-without-definition", Severity::Error, true},
    RuleInfo{"L002", "definition-without-contract", Severity::Warn, true},
    RuleInfo{"L003", "proof-markers-missing", Severity::Warn, true},
};

}  // namespace

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warn: return "warn";
    case Severity::Off: return "off";
  }
  return "off";
}

std::optional<Severity> severity_from_string(std::string_view text) {
  if (text == "error") return Severity::Error;
  if (text == "warn") return Severity::Warn;
  if (text == "off") return Severity::Off;
  return std::nullopt;
}

std::span<const RuleInfo> rule_catalog() { return kRules; }

const RuleInfo* find_rule(std::string_view id) {
  auto it = std::find_if(kRules.begin(), kRules.end(),
                         [&](const RuleInfo& info) { return info.id == id; });
  return it == kRules.end() ? nullptr : &*it;
}

Diagnostic make_diagnostic(std::string_view rule_id, Span span, std::string message,
                           std::optional<std::string> note) {
  Diagnostic d;
  d.rule_id = std::string(rule_id);
  const RuleInfo* info = find_rule(rule_id);
  d.severity = info ? info->default_level : Severity::Error;
  d.span = span;
  d.message = std::move(message);
  d.note = std::move(note);
  return d;
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
                     return a.rule_id < b.rule_id;
                   });
}

}  // namespace boop
