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

#include "boop/ocaml/parser.hpp"

#include <algorithm>
#include <array>
#include <fmt/format.h>
#include <initializer_list>
#include <string>

namespace boop::ocaml {
namespace {

// Binary operator levels between `,` and prefix operators, loosest first.
enum class Assoc { Left, Right };

struct OperatorLevel {
  std::initializer_list<std::string_view> ops;
  Assoc assoc;
};

const std::array<OperatorLevel, 6> kBinaryLevels = {{
    {{"||"}, Assoc::Right},
    {{"&&"}, Assoc::Right},
    {{"=", "<>", "<", "<=", ">", ">=", "==", "!="}, Assoc::Left},
    {{"@", "^", "::"}, Assoc::Right},
    {{"+", "-"}, Assoc::Left},
    {{"*", "/", "mod"}, Assoc::Left},
}};

struct SyntaxError {
  Diagnostic diagnostic;
};

std::string describe(const Token& tok) {
  if (tok.kind == TokenKind::EndOfInput) return "end of input";
  return fmt::format("`{}`", tok.text);
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) {
    for (const Token& t : tokens) {
      if (t.kind != TokenKind::Comment) toks_.push_back(t);
    }
    std::size_t end = toks_.empty() ? (tokens.empty() ? 0 : tokens.back().span.end) : toks_.back().span.end;
    if (!tokens.empty()) end = std::max(end, tokens.back().span.end);
    toks_.push_back(Token{TokenKind::EndOfInput, "", Span{end, end}});
  }

  ParseResult program() {
    ParseResult result;
    while (!at_end()) {
      if (peek().is(TokenKind::Punctuation, ";;")) {
        advance();
        continue;
      }
      std::size_t start = pos_;
      try {
        result.program.items.push_back(item());
      } catch (const SyntaxError& e) {
        result.diagnostics.push_back(e.diagnostic);
        recover(start);
      }
    }
    return result;
  }

  ExprParseResult expression() {
    ExprParseResult result;
    try {
      Expr e = seq_expr();
      if (!at_end()) fail({"end of input"});
      result.expr = std::move(e);
    } catch (const SyntaxError& e) {
      result.diagnostics.push_back(e.diagnostic);
    }
    return result;
  }

 private:
  // -- token cursor ---------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == TokenKind::EndOfInput; }
  const Token& advance() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    prev_end_ = t.span.end;
    return t;
  }
  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).is(TokenKind::Punctuation, p);
  }
  bool is_op(std::string_view o) const { return peek().is(TokenKind::Operator, o); }
  bool is_kw(std::string_view k) const { return peek().is_keyword(k); }

  bool accept_punct(std::string_view p) {
    if (!is_punct(p)) return false;
    advance();
    return true;
  }
  bool accept_kw(std::string_view k) {
    if (!is_kw(k)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(std::initializer_list<std::string_view> expected) const {
    std::string list;
    for (std::string_view e : expected) {
      if (!list.empty()) list += ", ";
      list += e;
    }
    const Token& tok = peek();
    std::string message = expected.size() == 1
                              ? fmt::format("expected {} but found {}", list, describe(tok))
                              : fmt::format("expected one of {} but found {}", list, describe(tok));
    throw SyntaxError{make_diagnostic("X010", tok.span, std::move(message))};
  }

  [[noreturn]] void fail_message(std::string message) const {
    throw SyntaxError{make_diagnostic("X010", peek().span, std::move(message))};
  }

  void expect_punct(std::string_view p) {
    if (!accept_punct(p)) fail({fmt::format("`{}`", p)});
  }
  void expect_kw(std::string_view k) {
    if (!accept_kw(k)) fail({fmt::format("`{}`", k)});
  }
  void expect_op(std::string_view o) {
    if (!is_op(o)) fail({fmt::format("`{}`", o)});
    advance();
  }

  Span from(std::size_t begin) const { return Span{begin, std::max(begin, prev_end_)}; }

  // Resumes after an error at the next `type`, or at a `let` that follows
  // a token which can end an expression (a nested `let` always follows one
  // that cannot, such as `=`, `->` or `in`).
  void recover(std::size_t start) {
    if (pos_ == start && !at_end()) advance();
    while (!at_end()) {
      const Token& t = peek();
      if (t.is_keyword("type")) return;
      if (t.is_keyword("let") && (pos_ == 0 || ends_expression(toks_[pos_ - 1]))) return;
      if (t.is(TokenKind::Punctuation, ";;")) return;
      advance();
    }
  }

  static bool ends_expression(const Token& t) {
    switch (t.kind) {
      case TokenKind::Identifier:
      case TokenKind::CapitalizedIdentifier:
      case TokenKind::QualifiedIdentifier:
      case TokenKind::Integer:
      case TokenKind::String:
        return true;
      case TokenKind::Keyword:
        return t.text == "true" || t.text == "false" || t.text == "done" || t.text == "end";
      case TokenKind::Punctuation:
        return t.text == ")" || t.text == "]" || t.text == ";;";
      default:
        return false;
    }
  }

  // -- items ----------------------------------------------------------------

  Item item() {
    std::size_t begin = peek().span.begin;
    if (is_kw("type")) {
      TypeDef def = type_def();
      Span span = def.span;
      return Item{std::move(def), span};
    }
    if (is_kw("let")) {
      advance();
      LetBinding let;
      let.rec = accept_kw("rec");
      do {
        let.bindings.push_back(binding());
      } while (accept_kw("and"));
      if (is_kw("in")) fail_message("top-level `let ... in` expressions are not supported; expected a definition");
      let.span = from(begin);
      Span span = let.span;
      return Item{std::move(let), span};
    }
    fail({"`let`", "`type`"});
  }

  TypeDef type_def() {
    std::size_t begin = peek().span.begin;
    expect_kw("type");
    if (peek().kind != TokenKind::Identifier) fail({"a lowercase type name"});
    TypeDef def;
    def.name = advance().text;
    expect_op("=");
    accept_punct("|");
    do {
      if (peek().kind != TokenKind::CapitalizedIdentifier) fail({"a constructor name"});
      std::size_t ctor_begin = peek().span.begin;
      ConstructorDecl ctor;
      ctor.name = advance().text;
      if (accept_kw("of")) ctor.arg = type_expr();
      ctor.span = from(ctor_begin);
      def.constructors.push_back(std::move(ctor));
    } while (accept_punct("|"));
    def.span = from(begin);
    return def;
  }

  Binding binding() {
    std::size_t begin = peek().span.begin;
    Pattern head;
    std::vector<Param> params;
    if (peek().kind == TokenKind::Identifier && peek().text != "_") {
      const Token& name = advance();
      head = Pattern{pat::Var{name.text}, name.span};
      while (can_start_param(peek())) params.push_back(param());
    } else {
      head = pattern();
    }
    std::optional<TypeExpr> ret;
    if (accept_punct(":")) ret = type_expr();
    if (!is_op("=")) {
      if (params.empty() && !ret && std::holds_alternative<pat::Var>(head.node)) {
        fail({"a parameter", "`:`", "`=`"});
      }
      fail({"`=`"});
    }
    advance();
    Expr body = seq_expr();
    return Binding{std::move(head), std::move(params), std::move(ret), std::move(body), from(begin)};
  }

  static bool can_start_param(const Token& t) {
    return t.kind == TokenKind::Identifier || t.is(TokenKind::Punctuation, "(");
  }

  Param param() {
    std::size_t begin = peek().span.begin;
    if (peek().kind == TokenKind::Identifier) {
      const Token& t = advance();
      Pattern p = t.text == "_" ? Pattern{pat::Wildcard{}, t.span} : Pattern{pat::Var{t.text}, t.span};
      return Param{std::move(p), std::nullopt, from(begin)};
    }
    expect_punct("(");
    if (accept_punct(")")) {
      return Param{Pattern{pat::Literal{Literal{Literal::Kind::Unit, ""}}, from(begin)}, std::nullopt, from(begin)};
    }
    Pattern p = pattern();
    std::optional<TypeExpr> annotation;
    if (accept_punct(":")) annotation = type_expr();
    expect_punct(")");
    return Param{std::move(p), std::move(annotation), from(begin)};
  }

  // -- types ----------------------------------------------------------------

  TypeExpr type_expr() {
    std::size_t begin = peek().span.begin;
    TypeExpr lhs = type_tuple();
    if (is_op("->")) {
      advance();
      TypeExpr rhs = type_expr();
      return TypeExpr{ty::Arrow{std::move(lhs), std::move(rhs)}, from(begin)};
    }
    return lhs;
  }

  TypeExpr type_tuple() {
    std::size_t begin = peek().span.begin;
    TypeExpr first = type_app();
    if (!is_op("*")) return first;
    ty::Tuple tuple;
    tuple.elems.push_back(std::move(first));
    while (is_op("*")) {
      advance();
      tuple.elems.push_back(type_app());
    }
    return TypeExpr{std::move(tuple), from(begin)};
  }

  TypeExpr type_app() {
    std::size_t begin = peek().span.begin;
    TypeExpr t = type_atom();
    while (peek().kind == TokenKind::Identifier || is_kw("ref")) {
      std::string ctor = advance().text;
      std::vector<TypeExpr> args;
      args.push_back(std::move(t));
      t = TypeExpr{ty::App{std::move(ctor), std::move(args)}, from(begin)};
    }
    return t;
  }

  TypeExpr type_atom() {
    std::size_t begin = peek().span.begin;
    if (peek().kind == TokenKind::Identifier || peek().kind == TokenKind::QualifiedIdentifier) {
      return TypeExpr{ty::Name{advance().text}, from(begin)};
    }
    if (accept_punct("(")) {
      TypeExpr inner = type_expr();
      expect_punct(")");
      return TypeExpr{ty::Paren{std::move(inner)}, from(begin)};
    }
    fail({"a type"});
  }

  // -- patterns -------------------------------------------------------------

  Pattern pattern() {
    std::size_t begin = peek().span.begin;
    Pattern first = pattern_cons();
    if (!is_punct(",")) return first;
    pat::Tuple tuple;
    tuple.elems.push_back(std::move(first));
    while (accept_punct(",")) tuple.elems.push_back(pattern_cons());
    return Pattern{std::move(tuple), from(begin)};
  }

  Pattern pattern_cons() {
    std::size_t begin = peek().span.begin;
    Pattern head = pattern_app();
    if (!is_op("::")) return head;
    advance();
    Pattern tail = pattern_cons();
    return Pattern{pat::Cons{std::move(head), std::move(tail)}, from(begin)};
  }

  Pattern pattern_app() {
    std::size_t begin = peek().span.begin;
    if (peek().kind == TokenKind::CapitalizedIdentifier) {
      pat::Constructor ctor{advance().text, {}};
      if (can_start_pattern_atom(peek())) ctor.args.push_back(pattern_atom());
      return Pattern{std::move(ctor), from(begin)};
    }
    return pattern_atom();
  }

  static bool can_start_pattern_atom(const Token& t) {
    switch (t.kind) {
      case TokenKind::Identifier:
      case TokenKind::CapitalizedIdentifier:
      case TokenKind::Integer:
      case TokenKind::String:
        return true;
      case TokenKind::Keyword:
        return t.text == "true" || t.text == "false";
      case TokenKind::Punctuation:
        return t.text == "(" || t.text == "[";
      default:
        return false;
    }
  }

  Pattern pattern_atom() {
    std::size_t begin = peek().span.begin;
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Identifier:
        advance();
        if (t.text == "_") return Pattern{pat::Wildcard{}, from(begin)};
        return Pattern{pat::Var{t.text}, from(begin)};
      case TokenKind::CapitalizedIdentifier:
        advance();
        return Pattern{pat::Constructor{t.text, {}}, from(begin)};
      case TokenKind::Integer:
        advance();
        return Pattern{pat::Literal{Literal{Literal::Kind::Int, t.text}}, from(begin)};
      case TokenKind::String:
        advance();
        return Pattern{pat::Literal{string_literal(t)}, from(begin)};
      default:
        break;
    }
    if (is_kw("true") || is_kw("false")) {
      std::string text = advance().text;
      return Pattern{pat::Literal{Literal{Literal::Kind::Bool, text}}, from(begin)};
    }
    if (accept_punct("(")) {
      if (accept_punct(")")) return Pattern{pat::Literal{Literal{Literal::Kind::Unit, ""}}, from(begin)};
      Pattern inner = pattern();
      expect_punct(")");
      inner.span = from(begin);
      return inner;
    }
    if (accept_punct("[")) {
      expect_punct("]");
      return Pattern{pat::EmptyList{}, from(begin)};
    }
    fail({"a pattern"});
  }

  // -- expressions ----------------------------------------------------------

  static bool can_start_arg(const Token& t) {
    switch (t.kind) {
      case TokenKind::Identifier:
      case TokenKind::CapitalizedIdentifier:
      case TokenKind::QualifiedIdentifier:
      case TokenKind::Integer:
      case TokenKind::String:
        return true;
      case TokenKind::Keyword:
        return t.text == "true" || t.text == "false" || t.text == "ref" || t.text == "begin" ||
               t.text == "while" || t.text == "for";
      case TokenKind::Punctuation:
        return t.text == "(" || t.text == "[";
      case TokenKind::Operator:
        return t.text == "!";
      default:
        return false;
    }
  }

  static bool can_start_expr(const Token& t) {
    if (can_start_arg(t)) return true;
    if (t.is(TokenKind::Operator, "-")) return true;
    if (t.kind != TokenKind::Keyword) return false;
    return t.text == "not" || t.text == "let" || t.text == "match" || t.text == "fun" ||
           t.text == "function" || t.text == "if";
  }

  Expr seq_expr() {
    std::size_t begin = peek().span.begin;
    Expr first = expr();
    if (!is_punct(";")) return first;
    advance();
    if (!can_start_expr(peek())) return first;  // trailing `;`
    Expr second = seq_expr();
    return Expr{expr::Sequence{std::move(first), std::move(second)}, from(begin)};
  }

  Expr expr() {
    std::size_t begin = peek().span.begin;
    Expr lhs = tuple_expr();
    if (!is_op(":=")) return lhs;
    std::string op = advance().text;
    Expr rhs = expr();
    return Expr{expr::BinOp{std::move(op), std::move(lhs), std::move(rhs)}, from(begin)};
  }

  Expr tuple_expr() {
    std::size_t begin = peek().span.begin;
    Expr first = binary(0);
    if (!is_punct(",")) return first;
    expr::Tuple tuple;
    tuple.elems.push_back(std::move(first));
    while (accept_punct(",")) tuple.elems.push_back(binary(0));
    return Expr{std::move(tuple), from(begin)};
  }

  bool at_binary_op(std::size_t level) const {
    const Token& t = peek();
    if (t.kind != TokenKind::Operator && !t.is_keyword("mod")) return false;
    const auto& ops = kBinaryLevels[level].ops;
    return std::find(ops.begin(), ops.end(), t.text) != ops.end();
  }

  Expr binary(std::size_t level) {
    if (level == kBinaryLevels.size()) return unary();
    std::size_t begin = peek().span.begin;
    Expr lhs = binary(level + 1);
    while (at_binary_op(level)) {
      std::string op = advance().text;
      if (kBinaryLevels[level].assoc == Assoc::Right) {
        Expr rhs = binary(level);
        return Expr{expr::BinOp{std::move(op), std::move(lhs), std::move(rhs)}, from(begin)};
      }
      Expr rhs = binary(level + 1);
      lhs = Expr{expr::BinOp{std::move(op), std::move(lhs), std::move(rhs)}, from(begin)};
    }
    return lhs;
  }

  Expr unary() {
    std::size_t begin = peek().span.begin;
    if (is_op("-") || is_kw("not")) {
      std::string op = advance().text;
      Expr operand = unary();
      return Expr{expr::UnOp{std::move(op), std::move(operand)}, from(begin)};
    }
    if (is_kw("let")) return let_in();
    if (is_kw("match")) return match();
    if (is_kw("function")) return function();
    if (is_kw("fun")) return lambda();
    if (is_kw("if")) return if_expr();
    return application();
  }

  Expr application() {
    std::size_t begin = peek().span.begin;
    Expr head = [&] {
      if (peek().kind == TokenKind::CapitalizedIdentifier) {
        expr::ConstructorApp ctor{advance().text, {}};
        if (can_start_arg(peek())) ctor.args.push_back(arg_expr());
        return Expr{std::move(ctor), from(begin)};
      }
      return arg_expr();
    }();
    while (can_start_arg(peek())) {
      Expr arg = arg_expr();
      head = Expr{expr::Apply{std::move(head), std::move(arg)}, from(begin)};
    }
    return head;
  }

  Expr arg_expr() {
    std::size_t begin = peek().span.begin;
    if (is_op("!")) {
      std::string op = advance().text;
      Expr operand = arg_expr();
      return Expr{expr::UnOp{std::move(op), std::move(operand)}, from(begin)};
    }
    return atom();
  }

  static Literal string_literal(const Token& t) {
    return Literal{Literal::Kind::String, t.text.substr(1, t.text.size() - 2)};
  }

  Expr atom() {
    std::size_t begin = peek().span.begin;
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Integer:
        advance();
        return Expr{expr::Literal{Literal{Literal::Kind::Int, t.text}}, from(begin)};
      case TokenKind::String:
        advance();
        return Expr{expr::Literal{string_literal(t)}, from(begin)};
      case TokenKind::Identifier:
        advance();
        return Expr{expr::Ident{"", t.text}, from(begin)};
      case TokenKind::QualifiedIdentifier: {
        advance();
        std::size_t dot = t.text.rfind('.');
        return Expr{expr::Ident{t.text.substr(0, dot), t.text.substr(dot + 1)}, from(begin)};
      }
      case TokenKind::CapitalizedIdentifier:
        advance();
        return Expr{expr::ConstructorApp{t.text, {}}, from(begin)};
      default:
        break;
    }
    if (is_kw("true") || is_kw("false")) {
      std::string text = advance().text;
      return Expr{expr::Literal{Literal{Literal::Kind::Bool, text}}, from(begin)};
    }
    if (is_kw("ref")) {
      advance();
      return Expr{expr::Ident{"", "ref"}, from(begin)};
    }
    if (is_punct("(") || is_kw("begin")) {
      bool paren = is_punct("(");
      advance();
      if (paren ? accept_punct(")") : accept_kw("end")) {
        return Expr{expr::Literal{Literal{Literal::Kind::Unit, ""}}, from(begin)};
      }
      Expr inner = seq_expr();
      if (paren) {
        expect_punct(")");
      } else {
        expect_kw("end");
      }
      if (std::holds_alternative<expr::Tuple>(inner.node)) {
        inner.span = from(begin);
        return inner;
      }
      return Expr{expr::Paren{std::move(inner)}, from(begin)};
    }
    if (accept_punct("[")) {
      expr::ListLit list;
      while (!is_punct("]")) {
        list.elems.push_back(expr());
        if (!accept_punct(";")) break;
      }
      expect_punct("]");
      return Expr{std::move(list), from(begin)};
    }
    if (accept_kw("while")) {
      Expr cond = seq_expr();
      expect_kw("do");
      Expr body = seq_expr();
      expect_kw("done");
      return Expr{expr::While{std::move(cond), std::move(body)}, from(begin)};
    }
    if (accept_kw("for")) {
      if (peek().kind != TokenKind::Identifier) fail({"a loop variable"});
      std::string var = advance().text;
      expect_op("=");
      Expr lo = seq_expr();
      bool downto = false;
      if (accept_kw("downto")) {
        downto = true;
      } else if (!accept_kw("to")) {
        fail({"`to`", "`downto`"});
      }
      Expr hi = seq_expr();
      expect_kw("do");
      Expr body = seq_expr();
      expect_kw("done");
      return Expr{expr::For{std::move(var), std::move(lo), downto, std::move(hi), std::move(body)},
                  from(begin)};
    }
    fail({"an expression"});
  }

  std::vector<MatchArm> arms() {
    std::vector<MatchArm> out;
    accept_punct("|");
    do {
      std::size_t begin = peek().span.begin;
      Pattern p = pattern();
      expect_op("->");
      Expr body = seq_expr();
      out.push_back(MatchArm{std::move(p), std::move(body), from(begin)});
    } while (accept_punct("|"));
    return out;
  }

  Expr let_in() {
    std::size_t begin = peek().span.begin;
    expect_kw("let");
    expr::LetIn let{false, {}, Expr{}};
    let.rec = accept_kw("rec");
    do {
      let.bindings.push_back(binding());
    } while (accept_kw("and"));
    expect_kw("in");
    let.body = seq_expr();
    return Expr{std::move(let), from(begin)};
  }

  Expr match() {
    std::size_t begin = peek().span.begin;
    expect_kw("match");
    Expr scrutinee = seq_expr();
    expect_kw("with");
    std::vector<MatchArm> list = arms();
    return Expr{expr::Match{std::move(scrutinee), std::move(list)}, from(begin)};
  }

  Expr function() {
    std::size_t begin = peek().span.begin;
    expect_kw("function");
    return Expr{expr::FunctionMatch{arms()}, from(begin)};
  }

  Expr lambda() {
    std::size_t begin = peek().span.begin;
    expect_kw("fun");
    std::vector<Param> params;
    while (can_start_param(peek())) params.push_back(param());
    if (params.empty()) fail({"a parameter"});
    expect_op("->");
    Expr body = seq_expr();
    return Expr{expr::Lambda{std::move(params), std::move(body)}, from(begin)};
  }

  Expr if_expr() {
    std::size_t begin = peek().span.begin;
    expect_kw("if");
    Expr cond = seq_expr();
    expect_kw("then");
    Expr then_branch = expr();
    expr::If node{std::move(cond), std::move(then_branch), std::nullopt};
    if (accept_kw("else")) node.else_branch = expr();
    return Expr{std::move(node), from(begin)};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t prev_end_ = 0;
};

}  // namespace

ParseResult parse_program(std::span<const Token> tokens) { return Parser(tokens).program(); }

ExprParseResult parse_expression(std::span<const Token> tokens) {
  return Parser(tokens).expression();
}

}  // namespace boop::ocaml
