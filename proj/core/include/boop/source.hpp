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

#include <cstddef>
#include <string_view>
#include <vector>

#include "boop/diagnostic.hpp"

namespace boop {

// Zero-based line and UTF-16 code-unit column, as used on the LSP wire.
struct Utf16Position {
  std::size_t line = 0;
  std::size_t character = 0;

  friend bool operator==(const Utf16Position&, const Utf16Position&) = default;
};

/// Maps byte offsets of a text to line/column positions.
///
/// The index keeps a view of the text; the text must outlive it.
class LineIndex {
 public:
  explicit LineIndex(std::string_view text);

  Position position(std::size_t offset) const;
  Utf16Position utf16_position(std::size_t offset) const;

  std::size_t line_count() const { return line_starts_.size(); }
  // `line` is 1-based. The returned start/end exclude the line terminator.
  std::size_t line_begin(std::size_t line) const;
  std::size_t line_end(std::size_t line) const;
  std::string_view line_text(std::size_t line) const;

 private:
  std::size_t line_of(std::size_t offset) const;

  std::string_view text_;
  std::vector<std::size_t> line_starts_;
};

/// Fills `start`/`end` of every diagnostic from its byte span.
void resolve_positions(std::vector<Diagnostic>& diagnostics, const LineIndex& index);

}  // namespace boop
