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

#include <string>
#include <string_view>

#include "boop/span.hpp"

namespace boop::ocaml {

enum class TokenKind {
  Identifier,             // lowercase or `_` initial: plus, a', _
  CapitalizedIdentifier,  // constructors: Zero, Succ
  QualifiedIdentifier,    // List.rev
  Integer,
  String,
  Keyword,
  Operator,
  Punctuation,
  Comment,
  EndOfInput,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::EndOfInput;
  std::string text;
  Span span;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_keyword(std::string_view t) const { return is(TokenKind::Keyword, t); }

  friend bool operator==(const Token&, const Token&) = default;
};

bool is_keyword(std::string_view word);

}  // namespace boop::ocaml
