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
#include <string_view>
#include <vector>

#include "boop/diagnostic.hpp"
#include "boop/ocaml/ast.hpp"
#include "boop/ocaml/token.hpp"

namespace boop::ocaml {

struct ParseResult {
  Program program;  // items that parsed; failed items are dropped
  std::vector<Diagnostic> diagnostics;  // X010

  bool ok() const { return diagnostics.empty(); }
};

/// Parses a token stream from `lex` (comments are skipped). On a syntax
/// error the parser reports X010 and resumes at the next top-level `let` or
/// `type`, so one file can yield several errors.
///
/// Operator precedence, loosest first: `;`, `:=`, `,`, `||`, `&&`,
/// comparisons, `@ ^ ::`, `+ -`, `* / mod`, prefix `not -`, application,
/// prefix `!`. `let`, `match`, `fun`, `function` and `if` extend as far to the
/// right as possible.
ParseResult parse_program(std::span<const Token> tokens);

struct ExprParseResult {
  std::optional<Expr> expr;
  std::vector<Diagnostic> diagnostics;
};

/// Parses a single expression covering the whole token stream.
ExprParseResult parse_expression(std::span<const Token> tokens);

}  // namespace boop::ocaml
