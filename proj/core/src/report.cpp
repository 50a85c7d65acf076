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

#include "boop/report.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "boop/source.hpp"

namespace boop {
namespace {

bool is_continuation(char c) { return (static_cast<unsigned char>(c) & 0xC0) == 0x80; }

// Underline for bytes [lo, hi) of `line`; a tab in the indent stays a tab
// so the carets line up however the terminal expands it.
std::string underline(std::string_view line, std::size_t lo, std::size_t hi) {
  std::string out;
  for (std::size_t i = 0; i < lo && i < line.size(); ++i) {
    if (line[i] == '\t') {
      out += '\t';
    } else if (!is_continuation(line[i])) {
      out += ' ';
    }
  }
  if (hi <= lo) return out + '^';
  for (std::size_t i = lo; i < hi && i < line.size(); ++i) {
    if (!is_continuation(line[i])) out += '^';
  }
  if (hi > line.size() && lo >= line.size()) out += '^';
  return out;
}

void snippet(std::string& out, const Diagnostic& d, const LineIndex& index) {
  std::size_t first = d.start.line;
  std::size_t last = d.end.line;
  // A span ending right after a newline does not cover the next line.
  if (last > first && d.end.column == 1) --last;
  std::size_t width = fmt::formatted_size("{}", last);
  for (std::size_t line = first; line <= last && line <= index.line_count(); ++line) {
    std::size_t begin = index.line_begin(line);
    std::string_view text = index.line_text(line);
    std::size_t lo = line == first ? d.span.begin - begin : 0;
    std::size_t hi = line == d.end.line ? d.span.end - begin : text.size();
    if (d.span.empty()) hi = lo;
    out += fmt::format(" {:>{}} | {}\n", line, width, text);
    out += fmt::format(" {:>{}} | {}\n", "", width, underline(text, lo, std::max(hi, lo)));
  }
}

}  // namespace

std::string render_human(const CheckResult& result) {
  std::string out;
  LineIndex index(result.source);
  for (const Diagnostic& d : result.diagnostics) {
    std::string_view label = d.severity == Severity::Error ? "error" : "warning";
    out += fmt::format("{}[{}] {}:{}:{}: {}\n", label, d.rule_id, result.file, d.start.line,
                       d.start.column, d.message);
    if (!result.source.empty()) snippet(out, d, index);
    if (d.note) out += fmt::format("note: {}\n", *d.note);
    out += '\n';
  }
  out += fmt::format("{} errors, {} warnings\n", result.error_count, result.warn_count);
  return out;
}

std::string render_json(const CheckResult& result) {
  using nlohmann::ordered_json;
  ordered_json root;
  root["file"] = result.file;
  root["summary"] = {{"errors", result.error_count}, {"warnings", result.warn_count}};
  ordered_json list = ordered_json::array();
  for (const Diagnostic& d : result.diagnostics) {
    ordered_json item;
    item["rule_id"] = d.rule_id;
    item["severity"] = to_string(d.severity);
    item["message"] = d.message;
    item["note"] = d.note ? ordered_json(*d.note) : ordered_json(nullptr);
    item["span"] = {
        {"start_byte", d.span.begin}, {"end_byte", d.span.end},     {"start_line", d.start.line},
        {"start_col", d.start.column}, {"end_line", d.end.line},   {"end_col", d.end.column},
    };
    list.push_back(std::move(item));
  }
  root["diagnostics"] = std::move(list);
  return root.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string render_sections(const BoopDocument& document, bool json) {
  std::array<SectionStatus, 4> statuses = section_statuses(document);
  if (json) {
    nlohmann::ordered_json root = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < kAllSectionKinds.size(); ++i) {
      root[std::string(to_string(kAllSectionKinds[i]))] = to_string(statuses[i]);
    }
    return root.dump() + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < kAllSectionKinds.size(); ++i) {
    out += fmt::format("{}: {}\n", to_string(kAllSectionKinds[i]), to_string(statuses[i]));
  }
  return out;
}

}  // namespace boop
