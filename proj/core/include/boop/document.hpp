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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boop/diagnostic.hpp"
#include "boop/span.hpp"

namespace boop {

// Canonical order: Blueprint < Operations < Code < Proof.
enum class SectionKind { Blueprint, Operations, Code, Proof };

inline constexpr std::array<SectionKind, 4> kAllSectionKinds = {
    SectionKind::Blueprint, SectionKind::Operations, SectionKind::Code, SectionKind::Proof};

std::string_view to_string(SectionKind kind);  // "blueprint", "operations", ...
std::optional<SectionKind> section_kind_from_string(std::string_view name);
std::string_view header_literal(SectionKind kind);  // "(*** BLUEPRINT ***)", ...

struct Section {
  SectionKind kind;
  Span header_span;  // the header line including its line terminator
  Span label_span;   // the header literal itself, without surrounding whitespace
  Span body_span;
  std::string body;
};

/// A submission split at its section headers.
///
/// `preamble`, the header lines and the section bodies, concatenated in
/// document order, reproduce the source byte for byte.
struct BoopDocument {
  std::string preamble;
  std::vector<Section> sections;  // at most one per kind, in canonical order
  std::size_t source_len = 0;

  const Section* find(SectionKind kind) const;
};

struct SplitResult {
  BoopDocument document;
  std::vector<Diagnostic> diagnostics;  // P003
};

/// Splits `source` at lines whose trimmed content is exactly one of the four
/// header literals. A duplicated header, or a header that appears before one
/// that must precede it, is reported as P003 and left inside the preceding
/// body instead of opening a section.
SplitResult split_sections(std::string_view source);

// Offsets of the meaningful text of one line once comment decoration
// (leading whitespace, `(*`, `*)`, leading `*` runs, trailing `*)`) is removed.
struct StrippedLine {
  std::size_t offset = 0;  // relative to the start of the line
  std::string_view text;
};
StrippedLine strip_decoration(std::string_view line);

/// True if every line of `text` is empty after decoration stripping.
bool is_blank_body(std::string_view text);

enum class SectionStatus { Present, Missing, Empty };
std::string_view to_string(SectionStatus status);
std::array<SectionStatus, 4> section_statuses(const BoopDocument& document);

// ---------------------------------------------------------------------------
// Blueprint

struct Clause {
  std::string text;
  Span span;
};

/// One function contract. A contract written without any `requires:` line
/// carries the single implicit precondition `true` (with an empty span at the
/// end of its `function:` line).
struct Contract {
  std::string name;
  std::vector<Clause> preconditions;
  std::vector<Clause> postconditions;
  Span decl_span;
};

struct BlueprintResult {
  std::vector<Contract> contracts;
  std::vector<Diagnostic> diagnostics;  // P004, P005
};

BlueprintResult parse_blueprint(const Section& section);

// ---------------------------------------------------------------------------
// Operations

struct OperationStep {
  unsigned number = 0;
  std::string text;
  Span span;
};

struct OperationSteps {
  std::vector<OperationStep> steps;
};

struct OperationsResult {
  OperationSteps steps;
  std::vector<Diagnostic> diagnostics;  // P002, P006
};

OperationsResult parse_operations(const Section& section);

// ---------------------------------------------------------------------------
// Proof

struct ProofStrategy {
  std::string name;
  std::vector<std::string> markers;  // lowercase phrases
};

struct ProofMarker {
  std::string marker;  // lowercase canonical phrase
  Span span;
};

struct ProofOutline {
  std::vector<ProofMarker> markers;  // in text order
  std::string raw;
  Span header_span;
};

ProofOutline parse_proof(const Section& section, std::span<const ProofStrategy> strategies);

}  // namespace boop
