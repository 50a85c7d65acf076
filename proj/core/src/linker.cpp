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

#include "boop/linker.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <set>

namespace boop {
namespace {

void emit(std::vector<Diagnostic>& out, const RuleConfig& config, std::string_view rule, Span span,
          std::string message, std::optional<std::string> note = std::nullopt) {
  Severity level = config.level(rule);
  if (level == Severity::Off) return;
  Diagnostic d = make_diagnostic(rule, span, std::move(message), std::move(note));
  d.severity = level;
  out.push_back(std::move(d));
}

}  // namespace

std::vector<Diagnostic> check_completeness(const BoopDocument& document, const RuleConfig& config) {
  std::vector<Diagnostic> out;
  for (SectionKind kind : kAllSectionKinds) {
    bool required = std::find(config.required_sections.begin(), config.required_sections.end(), kind) !=
                    config.required_sections.end();
    if (!required) continue;
    const Section* section = document.find(kind);
    if (section == nullptr) {
      emit(out, config, "P001", Span{0, 0}, fmt::format("missing required section `{}`", to_string(kind)),
           fmt::format("add a `{}` header followed by the section", header_literal(kind)));
    } else if (is_blank_body(section->body)) {
      emit(out, config, "P002", section->label_span, fmt::format("section `{}` is empty", to_string(kind)));
    }
  }
  return out;
}

LinkReport link_contracts(const std::vector<Contract>& contracts, const ocaml::Program& program) {
  LinkReport report;
  std::vector<const ocaml::Binding*> functions;
  for (const ocaml::Item& item : program.items) {
    if (const auto* let = std::get_if<ocaml::LetBinding>(&item.node)) {
      for (const ocaml::Binding& b : let->bindings) {
        if (b.is_function() && !b.name().empty()) functions.push_back(&b);
      }
    }
  }

  std::set<std::string, std::less<>> contracted;
  for (const Contract& contract : contracts) {
    contracted.insert(contract.name);
    auto it = std::find_if(functions.begin(), functions.end(),
                           [&](const ocaml::Binding* b) { return b->name() == contract.name; });
    if (it == functions.end()) {
      report.unmatched_contracts.push_back(contract.name);
      report.diagnostics.push_back(make_diagnostic(
          "L001", contract.decl_span,
          fmt::format("contract for `{}` has no matching top-level function", contract.name),
          "define the function in the code section or fix the name in the blueprint"));
    } else {
      report.matched.push_back(ContractMatch{contract.name, (*it)->name_span()});
    }
  }

  for (const ocaml::Binding* b : functions) {
    if (contracted.contains(b->name())) continue;
    report.uncontracted_functions.emplace_back(b->name());
    report.diagnostics.push_back(make_diagnostic(
        "L002", b->name_span(), fmt::format("function `{}` has no contract in the blueprint", b->name()),
        fmt::format("add `function: {}` with its requires/ensures clauses", b->name())));
  }
  sort_diagnostics(report.diagnostics);
  return report;
}

std::vector<Diagnostic> check_proof_markers(const ProofOutline& outline, const RuleConfig& config) {
  std::vector<Diagnostic> out;
  if (config.proof_strategies.empty()) return out;

  const ProofStrategy* best = nullptr;
  std::vector<std::string> best_missing;
  for (const ProofStrategy& strategy : config.proof_strategies) {
    std::vector<std::string> missing;
    for (const std::string& marker : strategy.markers) {
      bool found = std::any_of(outline.markers.begin(), outline.markers.end(),
                               [&](const ProofMarker& m) { return m.marker == marker; });
      if (!found) missing.push_back(marker);
    }
    if (missing.empty()) return out;
    std::size_t found = strategy.markers.size() - missing.size();
    std::size_t best_found = best ? best->markers.size() - best_missing.size() : 0;
    if (best == nullptr || found > best_found) {
      best = &strategy;
      best_missing = std::move(missing);
    }
  }

  emit(out, config, "L003", outline.header_span,
       fmt::format("proof outline is missing {} marker{}: \"{}\"", best->name,
                   best_missing.size() == 1 ? "" : "s", fmt::join(best_missing, "\", \"")),
       fmt::format("a {} proof names each of: {}", best->name, fmt::join(best->markers, ", ")));
  return out;
}

}  // namespace boop
