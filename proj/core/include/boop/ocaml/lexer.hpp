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

#include <string_view>
#include <vector>

#include "boop/diagnostic.hpp"
#include "boop/ocaml/token.hpp"

namespace boop::ocaml {

struct LexResult {
  std::vector<Token> tokens;  // includes comments; no EndOfInput token
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

/// Tokenizes the code phase. `base_offset` is added to every span so that
/// tokens point into the enclosing submission text.
LexResult lex(std::string_view code, std::size_t base_offset = 0);

}  // namespace boop::ocaml
