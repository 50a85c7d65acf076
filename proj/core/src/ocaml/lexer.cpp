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

#include "boop/ocaml/lexer.hpp"

#include <algorithm>
#include <array>
#include <fmt/format.h>

namespace boop::ocaml {
namespace {

constexpr std::array<std::string_view, 26> kKeywords = {
    "let",  "rec",  "and",   "in",   "type", "of",    "match", "with", "function",
    "fun",  "if",   "then",  "else", "while", "do",   "done",  "for",  "to",
    "downto", "begin", "end", "true", "false", "not", "mod",   "ref"};

// Longest first so that `:=` wins over `:`.
constexpr std::array<std::string_view, 10> kTwoCharOperators = {
    ":=", "::", "->", "<>", "<=", ">=", "==", "!=", "&&", "||"};
constexpr std::string_view kOneCharOperators = "+-*/=<>@^!";
constexpr std::string_view kPunctuation = "()[],;:|";

bool is_lower(char c) { return (c >= 'a' && c <= 'z') || c == '_'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_lower(c) || is_upper(c) || is_digit(c) || c == '\''; }
bool is_whitespace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

std::size_t utf8_length(unsigned char lead) {
  if (lead >= 0xF0) return 4;
  if (lead >= 0xE0) return 3;
  if (lead >= 0xC0) return 2;
  return 1;
}

class Lexer {
 public:
  Lexer(std::string_view code, std::size_t base) : code_(code), base_(base) {}

  LexResult run() {
    while (pos_ < code_.size()) {
      char c = code_[pos_];
      if (is_whitespace(c)) {
        ++pos_;
      } else if (starts_with("(*")) {
        comment();
      } else if (c == '"') {
        string_literal();
      } else if (is_digit(c)) {
        integer();
      } else if (is_lower(c)) {
        word();
      } else if (is_upper(c)) {
        capitalized();
      } else if (!symbol()) {
        std::size_t len = std::min(utf8_length(static_cast<unsigned char>(c)), code_.size() - pos_);
        result_.diagnostics.push_back(make_diagnostic(
            "X003", span(pos_, pos_ + len),
            fmt::format("illegal character `{}`", code_.substr(pos_, len))));
        pos_ += len;
      }
    }
    return std::move(result_);
  }

 private:
  bool starts_with(std::string_view s) const { return code_.substr(pos_).starts_with(s); }

  Span span(std::size_t b, std::size_t e) const { return Span{base_ + b, base_ + e}; }

  void emit(TokenKind kind, std::size_t begin) {
    result_.tokens.push_back(Token{kind, std::string(code_.substr(begin, pos_ - begin)), span(begin, pos_)});
  }

  void comment() {
    std::size_t begin = pos_;
    pos_ += 2;
    int depth = 1;
    while (pos_ < code_.size() && depth > 0) {
      if (starts_with("(*")) {
        ++depth;
        pos_ += 2;
      } else if (starts_with("*)")) {
        --depth;
        pos_ += 2;
      } else {
        ++pos_;
      }
    }
    if (depth > 0) {
      result_.diagnostics.push_back(
          make_diagnostic("X001", span(begin, begin + 2), "unterminated comment",
                          "every `(*` needs a matching `*)`"));
      return;
    }
    emit(TokenKind::Comment, begin);
  }

  void string_literal() {
    std::size_t begin = pos_++;
    while (pos_ < code_.size()) {
      char c = code_[pos_];
      if (c == '\\' && pos_ + 1 < code_.size()) {
        pos_ += 2;
      } else if (c == '"') {
        ++pos_;
        emit(TokenKind::String, begin);
        return;
      } else {
        ++pos_;
      }
    }
    result_.diagnostics.push_back(
        make_diagnostic("X002", span(begin, begin + 1), "unterminated string literal"));
  }

  void integer() {
    std::size_t begin = pos_;
    while (pos_ < code_.size() && (is_digit(code_[pos_]) || code_[pos_] == '_')) ++pos_;
    emit(TokenKind::Integer, begin);
  }

  void read_ident() {
    while (pos_ < code_.size() && is_ident_char(code_[pos_])) ++pos_;
  }

  void word() {
    std::size_t begin = pos_;
    read_ident();
    emit(is_keyword(code_.substr(begin, pos_ - begin)) ? TokenKind::Keyword : TokenKind::Identifier, begin);
  }

  // `Zero`, or a module path such as `List.rev` / `Stdlib.List.length`.
  void capitalized() {
    std::size_t begin = pos_;
    read_ident();
    bool qualified = false;
    while (pos_ + 1 < code_.size() && code_[pos_] == '.' &&
           (is_lower(code_[pos_ + 1]) || is_upper(code_[pos_ + 1]))) {
      bool segment_upper = is_upper(code_[pos_ + 1]);
      ++pos_;
      read_ident();
      qualified = true;
      if (!segment_upper) break;
    }
    emit(qualified ? TokenKind::QualifiedIdentifier : TokenKind::CapitalizedIdentifier, begin);
  }

  bool symbol() {
    std::size_t begin = pos_;
    if (starts_with(";;")) {
      pos_ += 2;
      emit(TokenKind::Punctuation, begin);
      return true;
    }
    for (std::string_view op : kTwoCharOperators) {
      if (starts_with(op)) {
        pos_ += 2;
        emit(TokenKind::Operator, begin);
        return true;
      }
    }
    char c = code_[pos_];
    if (kOneCharOperators.find(c) != std::string_view::npos) {
      ++pos_;
      emit(TokenKind::Operator, begin);
      return true;
    }
    if (kPunctuation.find(c) != std::string_view::npos) {
      ++pos_;
      emit(TokenKind::Punctuation, begin);
      return true;
    }
    return false;
  }

  std::string_view code_;
  std::size_t base_;
  std::size_t pos_ = 0;
  LexResult result_;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::CapitalizedIdentifier: return "capitalized identifier";
    case TokenKind::QualifiedIdentifier: return "module-qualified identifier";
    case TokenKind::Integer: return "integer literal";
    case TokenKind::String: return "string literal";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Comment: return "comment";
    case TokenKind::EndOfInput: return "end of input";
  }
  return "token";
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

LexResult lex(std::string_view code, std::size_t base_offset) {
  return Lexer(code, base_offset).run();
}

}  // namespace boop::ocaml
