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

#include "boop/check.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fstream>
#include <sstream>

#include "boop/ocaml/lexer.hpp"
#include "boop/ocaml/parser.hpp"
#include "boop/rules.hpp"
#include "boop/source.hpp"

namespace boop {
namespace {

void append(std::vector<Diagnostic>& out, std::vector<Diagnostic> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

bool has(const std::vector<Diagnostic>& diags, std::string_view rule_id, Span span) {
  return std::any_of(diags.begin(), diags.end(),
                     [&](const Diagnostic& d) { return d.rule_id == rule_id && d.span == span; });
}

}  // namespace

Analysis analyze(std::string_view source, const RuleConfig& config) {
  Analysis a;
  SplitResult split = split_sections(source);
  a.document = std::move(split.document);
  std::vector<Diagnostic> diags = std::move(split.diagnostics);
  append(diags, check_completeness(a.document, config));

  if (const Section* s = a.document.find(SectionKind::Blueprint)) {
    BlueprintResult bp = parse_blueprint(*s);
    a.contracts = std::move(bp.contracts);
    append(diags, std::move(bp.diagnostics));
  }
  if (const Section* s = a.document.find(SectionKind::Operations)) {
    OperationsResult ops = parse_operations(*s);
    a.steps = std::move(ops.steps);
    bool required = std::find(config.required_sections.begin(), config.required_sections.end(),
                              SectionKind::Operations) != config.required_sections.end();
    // A blank operations section is already reported by the completeness
    // check; one without numbered steps is only a problem when required.
    std::erase_if(ops.diagnostics, [&](const Diagnostic& d) {
      return d.rule_id == "P002" && (!required || has(diags, "P002", d.span));
    });
    append(diags, std::move(ops.diagnostics));
  }
  if (const Section* s = a.document.find(SectionKind::Code)) {
    ocaml::LexResult lexed = ocaml::lex(s->body, s->body_span.begin);
    if (!lexed.ok()) {
      append(diags, std::move(lexed.diagnostics));
    } else {
      ocaml::ParseResult parsed = ocaml::parse_program(lexed.tokens);
      if (!parsed.ok()) {
        append(diags, std::move(parsed.diagnostics));
      } else {
        a.program = std::move(parsed.program);
      }
    }
  }

  if (a.program) {
    append(diags, run_rules(*a.program, config));
    if (a.document.find(SectionKind::Blueprint) != nullptr) {
      a.links = link_contracts(a.contracts, *a.program);
      append(diags, a.links->diagnostics);
    }
  }
  if (const Section* s = a.document.find(SectionKind::Proof)) {
    a.proof = parse_proof(*s, config.proof_strategies);
    append(diags, check_proof_markers(*a.proof, config));
  }

  std::erase_if(diags, [&](Diagnostic& d) {
    d.severity = config.level(d.rule_id);
    return d.severity == Severity::Off;
  });
  sort_diagnostics(diags);
  resolve_positions(diags, LineIndex(source));
  a.diagnostics = std::move(diags);
  return a;
}

CheckResult check_source(std::string file, std::string source, const RuleConfig& config) {
  CheckResult result;
  result.file = std::move(file);
  result.source = std::move(source);
  result.diagnostics = analyze(result.source, config).diagnostics;
  for (const Diagnostic& d : result.diagnostics) {
    if (d.severity == Severity::Error) ++result.error_count;
    if (d.severity == Severity::Warn) ++result.warn_count;
  }
  return result;
}

CheckResult check_file(const std::filesystem::path& path, const RuleConfig& config) {
  std::error_code ec;
  std::ifstream in(path, std::ios::binary);
  if (!std::filesystem::is_regular_file(path, ec) || !in) {
    CheckResult result;
    result.file = path.string();
    Diagnostic d = make_diagnostic("F001", Span{0, 0}, fmt::format("cannot read `{}`", path.string()));
    result.diagnostics.push_back(std::move(d));
    result.error_count = 1;
    return result;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return check_source(path.string(), buffer.str(), config);
}

}  // namespace boop
