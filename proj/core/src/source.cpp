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

#include "boop/source.hpp"

#include <algorithm>

namespace boop {
namespace {

bool is_continuation_byte(unsigned char c) { return (c & 0xC0) == 0x80; }

// Number of UTF-16 code units needed for the code point led by `lead`.
std::size_t utf16_units(unsigned char lead) { return (lead & 0xF8) == 0xF0 ? 2 : 1; }

}  // namespace

LineIndex::LineIndex(std::string_view text) : text_(text) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') line_starts_.push_back(i + 1);
  }
}

std::size_t LineIndex::line_of(std::size_t offset) const {
  offset = std::min(offset, text_.size());
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  return static_cast<std::size_t>(it - line_starts_.begin());  // 1-based
}

std::size_t LineIndex::line_begin(std::size_t line) const { return line_starts_.at(line - 1); }

std::size_t LineIndex::line_end(std::size_t line) const {
  std::size_t end = line < line_starts_.size() ? line_starts_[line] - 1 : text_.size();
  if (end > line_begin(line) && text_[end - 1] == '\r') --end;
  return end;
}

std::string_view LineIndex::line_text(std::size_t line) const {
  std::size_t begin = line_begin(line);
  return text_.substr(begin, line_end(line) - begin);
}

Position LineIndex::position(std::size_t offset) const {
  offset = std::min(offset, text_.size());
  std::size_t line = line_of(offset);
  std::size_t column = 1;
  for (std::size_t i = line_begin(line); i < offset; ++i) {
    if (!is_continuation_byte(static_cast<unsigned char>(text_[i]))) ++column;
  }
  return Position{line, column};
}

Utf16Position LineIndex::utf16_position(std::size_t offset) const {
  offset = std::min(offset, text_.size());
  std::size_t line = line_of(offset);
  std::size_t character = 0;
  for (std::size_t i = line_begin(line); i < offset; ++i) {
    auto c = static_cast<unsigned char>(text_[i]);
    if (!is_continuation_byte(c)) character += utf16_units(c);
  }
  return Utf16Position{line - 1, character};
}

void resolve_positions(std::vector<Diagnostic>& diagnostics, const LineIndex& index) {
  for (Diagnostic& d : diagnostics) {
    d.start = index.position(d.span.begin);
    d.end = index.position(d.span.end);
  }
}

}  // namespace boop
