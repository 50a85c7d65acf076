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

#include "boop/document.hpp"

#include <algorithm>
#include <cctype>
#include <fmt/format.h>

namespace boop {
namespace {

constexpr std::array<std::string_view, 4> kNames = {"blueprint", "operations", "code", "proof"};
constexpr std::array<std::string_view, 4> kHeaders = {
    "(*** BLUEPRINT ***)", "(*** OPERATIONS ***)", "(*** CODE ***)", "(*** PROOF ***)"};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::size_t index_of(SectionKind kind) { return static_cast<std::size_t>(kind); }

// One physical line of a text: [begin, content_end) is the content,
// [begin, end) includes the terminator.
struct Line {
  std::size_t begin;
  std::size_t content_end;
  std::size_t end;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t nl = text.find('\n', begin);
    if (nl == std::string_view::npos) {
      lines.push_back({begin, text.size(), text.size()});
      break;
    }
    lines.push_back({begin, nl, nl + 1});
    begin = nl + 1;
  }
  return lines;
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct HeaderLine {
  SectionKind kind;
  Span line;
  Span label;
};

// Decoration-stripped line of a section body, with absolute offsets.
struct BodyLine {
  std::string_view text;
  std::size_t offset;  // absolute offset of text.front()

  Span span() const { return Span{offset, offset + text.size()}; }
};

std::vector<BodyLine> body_lines(const Section& section) {
  std::vector<BodyLine> out;
  std::string_view body = section.body;
  for (const Line& line : split_lines(body)) {
    StrippedLine stripped = strip_decoration(body.substr(line.begin, line.content_end - line.begin));
    out.push_back({stripped.text, section.body_span.begin + line.begin + stripped.offset});
  }
  return out;
}

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Recognizes `key: value` with a case-insensitive alphabetic key.
struct KeyedLine {
  std::string key;  // lowercase
  std::string_view value;
  std::size_t value_offset;  // relative to the stripped text
};

std::optional<KeyedLine> match_key(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
  if (i == 0) return std::nullopt;
  std::size_t key_end = i;
  while (i < text.size() && is_space(text[i])) ++i;
  if (i >= text.size() || text[i] != ':') return std::nullopt;
  ++i;
  while (i < text.size() && is_space(text[i])) ++i;
  std::size_t end = text.size();
  while (end > i && is_space(text[end - 1])) --end;
  return KeyedLine{lowercase(text.substr(0, key_end)), text.substr(i, end - i), i};
}

}  // namespace

std::string_view to_string(SectionKind kind) { return kNames[index_of(kind)]; }

std::optional<SectionKind> section_kind_from_string(std::string_view name) {
  for (SectionKind kind : kAllSectionKinds) {
    if (kNames[index_of(kind)] == name) return kind;
  }
  return std::nullopt;
}

std::string_view header_literal(SectionKind kind) { return kHeaders[index_of(kind)]; }

const Section* BoopDocument::find(SectionKind kind) const {
  for (const Section& s : sections) {
    if (s.kind == kind) return &s;
  }
  return nullptr;
}

SplitResult split_sections(std::string_view source) {
  SplitResult result;
  result.document.source_len = source.size();

  std::vector<HeaderLine> headers;
  for (const Line& line : split_lines(source)) {
    std::size_t b = line.begin;
    std::size_t e = line.content_end;
    while (b < e && is_space(source[b])) ++b;
    while (e > b && is_space(source[e - 1])) --e;
    std::string_view trimmed = source.substr(b, e - b);
    for (SectionKind kind : kAllSectionKinds) {
      if (trimmed == header_literal(kind)) {
        headers.push_back({kind, Span{line.begin, line.end}, Span{b, e}});
        break;
      }
    }
  }

  // A repeated kind is a duplicate; a header followed (later in the file) by
  // a header of an earlier kind is out of order.
  std::vector<bool> rejected(headers.size(), false);
  std::array<std::optional<std::size_t>, 4> first_seen;
  for (std::size_t i = 0; i < headers.size(); ++i) {
    auto& first = first_seen[index_of(headers[i].kind)];
    if (first) {
      rejected[i] = true;
      std::size_t first_line =
          static_cast<std::size_t>(std::count(source.begin(),
                                              source.begin() + static_cast<std::ptrdiff_t>(headers[*first].line.begin),
                                              '\n')) + 1;
      result.diagnostics.push_back(make_diagnostic(
          "P003", headers[i].label,
          fmt::format("duplicate `{}` header", header_literal(headers[i].kind)),
          fmt::format("the {} section already starts at line {}", to_string(headers[i].kind), first_line)));
    } else {
      first = i;
    }
  }
  for (std::size_t i = 0; i < headers.size(); ++i) {
    if (rejected[i]) continue;
    for (std::size_t j = i + 1; j < headers.size(); ++j) {
      if (!rejected[j] && headers[j].kind < headers[i].kind) {
        result.diagnostics.push_back(make_diagnostic(
            "P003", headers[i].label,
            fmt::format("`{}` appears before `{}`", header_literal(headers[i].kind),
                        header_literal(headers[j].kind)),
            "sections must appear in the order blueprint, operations, code, proof"));
        rejected[i] = true;
        break;
      }
    }
  }
  sort_diagnostics(result.diagnostics);

  std::vector<const HeaderLine*> accepted;
  for (std::size_t i = 0; i < headers.size(); ++i) {
    if (!rejected[i]) accepted.push_back(&headers[i]);
  }

  std::size_t preamble_end = accepted.empty() ? source.size() : accepted.front()->line.begin;
  result.document.preamble = std::string(source.substr(0, preamble_end));
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    const HeaderLine& h = *accepted[i];
    std::size_t body_end = i + 1 < accepted.size() ? accepted[i + 1]->line.begin : source.size();
    Section section;
    section.kind = h.kind;
    section.header_span = h.line;
    section.label_span = h.label;
    section.body_span = Span{h.line.end, body_end};
    section.body = std::string(source.substr(h.line.end, body_end - h.line.end));
    result.document.sections.push_back(std::move(section));
  }
  return result;
}

StrippedLine strip_decoration(std::string_view line) {
  std::size_t b = 0;
  std::size_t e = line.size();
  for (;;) {
    while (b < e && is_space(line[b])) ++b;
    if (line.substr(b, e - b).starts_with("(*") || line.substr(b, e - b).starts_with("*)")) {
      b += 2;
    } else if (b < e && line[b] == '*') {
      ++b;
    } else {
      break;
    }
  }
  for (;;) {
    while (e > b && is_space(line[e - 1])) --e;
    if (line.substr(b, e - b).ends_with("*)")) {
      e -= 2;
      continue;
    }
    // A right-hand box border: whitespace followed by a run of stars.
    std::size_t stars = e;
    while (stars > b && line[stars - 1] == '*') --stars;
    if (stars < e && (stars == b || is_space(line[stars - 1]))) {
      e = stars;
      continue;
    }
    break;
  }
  return StrippedLine{b, line.substr(b, e - b)};
}

bool is_blank_body(std::string_view text) {
  for (const Line& line : split_lines(text)) {
    if (!strip_decoration(text.substr(line.begin, line.content_end - line.begin)).text.empty()) {
      return false;
    }
  }
  return true;
}

std::string_view to_string(SectionStatus status) {
  switch (status) {
    case SectionStatus::Present: return "present";
    case SectionStatus::Missing: return "missing";
    case SectionStatus::Empty: return "empty";
  }
  return "missing";
}

std::array<SectionStatus, 4> section_statuses(const BoopDocument& document) {
  std::array<SectionStatus, 4> out{};
  for (SectionKind kind : kAllSectionKinds) {
    const Section* s = document.find(kind);
    out[index_of(kind)] = !s ? SectionStatus::Missing
                          : is_blank_body(s->body) ? SectionStatus::Empty
                                                   : SectionStatus::Present;
  }
  return out;
}

BlueprintResult parse_blueprint(const Section& section) {
  BlueprintResult result;
  std::optional<Contract> open;

  auto close = [&] {
    if (!open) return;
    if (open->postconditions.empty()) {
      result.diagnostics.push_back(make_diagnostic(
          "P005", open->decl_span, fmt::format("contract for `{}` has no ensures clause", open->name),
          "state the postcondition with an `ensures:` line"));
    }
    if (open->preconditions.empty()) {
      open->preconditions.push_back(Clause{"true", Span{open->decl_span.end, open->decl_span.end}});
    }
    result.contracts.push_back(std::move(*open));
    open.reset();
  };

  for (const BodyLine& line : body_lines(section)) {
    auto keyed = match_key(line.text);
    if (!keyed) continue;
    Span value_span{line.offset + keyed->value_offset,
                    line.offset + keyed->value_offset + keyed->value.size()};

    if (keyed->key == "function") {
      close();
      std::string_view value = keyed->value;
      std::size_t n = 0;
      if (!value.empty() && is_ident_start(value[0])) {
        while (n < value.size() && is_ident_char(value[n])) ++n;
      }
      if (n == 0) {
        result.diagnostics.push_back(make_diagnostic(
            "P004", line.span(), "`function:` must name a lowercase identifier",
            "clauses that follow have no contract to attach to"));
        continue;
      }
      open = Contract{std::string(value.substr(0, n)), {}, {}, line.span()};
    } else if (keyed->key == "requires" || keyed->key == "ensures") {
      if (!open) {
        result.diagnostics.push_back(make_diagnostic(
            "P004", line.span(), fmt::format("`{}:` clause appears before any `function:` line", keyed->key),
            "start each contract with `function: <name>`"));
        continue;
      }
      Clause clause{std::string(keyed->value), value_span};
      (keyed->key == "requires" ? open->preconditions : open->postconditions).push_back(std::move(clause));
    }
  }
  close();
  return result;
}

OperationsResult parse_operations(const Section& section) {
  OperationsResult result;
  OperationStep* current = nullptr;

  for (const BodyLine& line : body_lines(section)) {
    std::string_view text = line.text;
    std::size_t digits = 0;
    while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits]))) ++digits;
    bool is_step = digits > 0 && digits <= 9 && digits < text.size() && text[digits] == '.' &&
                   (digits + 1 == text.size() || is_space(text[digits + 1]));
    if (is_step) {
      unsigned number = static_cast<unsigned>(std::stoul(std::string(text.substr(0, digits))));
      unsigned expected = result.steps.steps.empty() ? 1 : result.steps.steps.back().number + 1;
      if (number != expected) {
        result.diagnostics.push_back(make_diagnostic(
            "P006", Span{line.offset, line.offset + digits + 1},
            expected == 1 ? fmt::format("operation steps start at {} instead of 1", number)
                          : fmt::format("operation step {} follows step {}", number, expected - 1),
            fmt::format("number the steps consecutively; expected {}.", expected)));
      }
      std::string_view rest = text.substr(digits + 1);
      while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
      result.steps.steps.push_back(OperationStep{number, std::string(rest), line.span()});
      current = &result.steps.steps.back();
    } else if (current && !text.empty()) {
      if (!current->text.empty()) current->text += ' ';
      current->text += text;
      current->span.end = line.offset + text.size();
    }
  }

  if (result.steps.steps.empty()) {
    result.diagnostics.push_back(make_diagnostic(
        "P002", section.label_span, "operations section has no numbered steps",
        "write the algorithm as steps `1.`, `2.`, ..."));
  }
  return result;
}

ProofOutline parse_proof(const Section& section, std::span<const ProofStrategy> strategies) {
  ProofOutline outline;
  outline.raw = section.body;
  outline.header_span = section.label_span;

  std::vector<std::string> phrases;
  for (const ProofStrategy& strategy : strategies) {
    for (const std::string& marker : strategy.markers) {
      std::string phrase = lowercase(marker);
      if (!phrase.empty() && std::find(phrases.begin(), phrases.end(), phrase) == phrases.end()) {
        phrases.push_back(std::move(phrase));
      }
    }
  }

  for (const BodyLine& line : body_lines(section)) {
    std::string lower = lowercase(line.text);
    std::vector<ProofMarker> found;
    for (const std::string& phrase : phrases) {
      for (std::size_t at = lower.find(phrase); at != std::string::npos; at = lower.find(phrase, at + 1)) {
        found.push_back({phrase, Span{line.offset + at, line.offset + at + phrase.size()}});
      }
    }
    std::sort(found.begin(), found.end(), [](const ProofMarker& a, const ProofMarker& b) {
      return a.span.begin != b.span.begin ? a.span.begin < b.span.begin : a.marker < b.marker;
    });
    outline.markers.insert(outline.markers.end(), found.begin(), found.end());
  }
  return outline;
}

}  // namespace boop
