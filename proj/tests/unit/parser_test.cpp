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

#include <doctest.h>

#include "boop/ocaml/lexer.hpp"
#include "boop/ocaml/parser.hpp"
#include "test_support.hpp"

using namespace boop;
using namespace boop::ocaml;
using boop::testing::slice;

namespace {

ParseResult parse(std::string_view code) {
  LexResult lexed = lex(code);
  REQUIRE(lexed.ok());
  return parse_program(lexed.tokens);
}

std::string expr_dump(std::string_view code) {
  LexResult lexed = lex(code);
  REQUIRE(lexed.ok());
  ExprParseResult r = parse_expression(lexed.tokens);
  INFO(code);
  REQUIRE(r.diagnostics.empty());
  REQUIRE(r.expr);
  return dump(*r.expr);
}

}  // namespace

TEST_SUITE_BEGIN("parser");

TEST_CASE("every corpus program parses without syntax errors") {
  for (const auto& listing : boop::testing::corpus_programs()) {
    INFO(listing.name);
    ParseResult r = parse(listing.code);
    CHECK(r.diagnostics.empty());
    CHECK_FALSE(r.program.items.empty());
  }
}

TEST_CASE("constructor application with a parenthesized call") {
  CHECK(expr_dump("Succ (plus a' b)") ==
        "(ctor Succ (paren (apply (apply (ident plus) (ident a')) (ident b))))");
  CHECK(expr_dump("Succ Zero") == "(ctor Succ (ctor Zero))");
  CHECK(expr_dump("Zero") == "(ctor Zero)");
}

TEST_CASE("binary operator precedence and associativity") {
  CHECK(expr_dump("a + b * c") == "(binop + (ident a) (binop * (ident b) (ident c)))");
  CHECK(expr_dump("a - b - c") == "(binop - (binop - (ident a) (ident b)) (ident c))");
  CHECK(expr_dump("a :: b :: c") == "(binop :: (ident a) (binop :: (ident b) (ident c)))");
  CHECK(expr_dump("a || b && c") == "(binop || (ident a) (binop && (ident b) (ident c)))");
  CHECK(expr_dump("a = b + 1") == "(binop = (ident a) (binop + (ident b) (int 1)))");
  CHECK(expr_dump("a mod b * c") == "(binop * (binop mod (ident a) (ident b)) (ident c))");
  CHECK(expr_dump("x @ y ^ z") == "(binop @ (ident x) (binop ^ (ident y) (ident z)))");
}

TEST_CASE("prefix operators") {
  CHECK(expr_dump("minus !r b") == "(apply (apply (ident minus) (unop ! (ident r))) (ident b))");
  CHECK(expr_dump("not (less_than !r b)") ==
        "(unop not (paren (apply (apply (ident less_than) (unop ! (ident r))) (ident b))))");
  CHECK(expr_dump("-f x") == "(unop - (apply (ident f) (ident x)))");
  CHECK(expr_dump("!n_ref = Zero") == "(binop = (unop ! (ident n_ref)) (ctor Zero))");
  CHECK(expr_dump("Succ !q") == "(ctor Succ (unop ! (ident q)))");
}

TEST_CASE("assignment, sequence and ref") {
  CHECK(expr_dump("r := minus !r b; q := Succ !q") ==
        "(seq (binop := (ident r) (apply (apply (ident minus) (unop ! (ident r))) (ident b))) "
        "(binop := (ident q) (ctor Succ (unop ! (ident q)))))");
  CHECK(expr_dump("ref Zero") == "(apply (ident ref) (ctor Zero))");
  CHECK(expr_dump("a; b;") == "(seq (ident a) (ident b))");
}

TEST_CASE("tuples, units, lists and begin/end") {
  CHECK(expr_dump("(Zero, a)") == "(tuple (ctor Zero) (ident a))");
  CHECK(expr_dump("f x, g y") == "(tuple (apply (ident f) (ident x)) (apply (ident g) (ident y)))");
  CHECK(expr_dump("()") == "(unit)");
  CHECK(expr_dump("begin end") == "(unit)");
  CHECK(expr_dump("begin x end") == "(paren (ident x))");
  CHECK(expr_dump("[1; 2]") == "(list (int 1) (int 2))");
  CHECK(expr_dump("[]") == "(list)");
  CHECK(expr_dump("\"hi\"") == "(string \"hi\")");
}

TEST_CASE("open-ended constructs extend to the right") {
  CHECK(expr_dump("if c then a else b; d") == "(seq (if (ident c) (ident a) (ident b)) (ident d))");
  CHECK(expr_dump("let x = 1 in x; y") ==
        "(letin (binding (pvar x) (params) (int 1)) (seq (ident x) (ident y)))");
  CHECK(expr_dump("match x with A -> 1 | B y -> y; z") ==
        "(match (ident x) (arm (pctor A) (int 1)) (arm (pctor B (pvar y)) (seq (ident y) (ident z))))");
  CHECK(expr_dump("fun (x : nat) y -> x") ==
        "(fun (params (param (pvar x) (tname nat)) (param (pvar y))) (ident x))");
  CHECK(expr_dump("function | [] -> 0 | x :: _ -> x") ==
        "(function (arm (pnil) (int 0)) (arm (pcons (pvar x) (pwild)) (ident x)))");
  CHECK(expr_dump("a + if c then 1 else 2") == "(binop + (ident a) (if (ident c) (int 1) (int 2)))");
}

TEST_CASE("loops") {
  CHECK(expr_dump("while !m <> Zero do m := Zero done") ==
        "(while (binop <> (unop ! (ident m)) (ctor Zero)) (binop := (ident m) (ctor Zero)))");
  CHECK(expr_dump("for i = 1 to n do f i done") ==
        "(for i (int 1) to (ident n) (apply (ident f) (ident i)))");
  CHECK(expr_dump("for i = n downto 0 do () done") == "(for i (ident n) downto (int 0) (unit))");
}

TEST_CASE("items, parameters and types") {
  ParseResult r = parse("type nat = Zero | Succ of nat\nlet rec div (a: nat) (b: nat) : (nat * nat) = (a, b)");
  REQUIRE(r.ok());
  CHECK(dump(r.program) ==
        "(program\n"
        "  (type nat (Zero) (Succ (tname nat)))\n"
        "  (let rec (binding (pvar div) (params (param (pvar a) (tname nat)) (param (pvar b) (tname nat))) "
        "(ret (tparen (ttuple (tname nat) (tname nat)))) (tuple (ident a) (ident b)))))");

  r = parse("let f (g : nat list -> bool) () _ (x, y) = g");
  REQUIRE(r.ok());
  CHECK(dump(r.program) ==
        "(program\n"
        "  (let (binding (pvar f) (params (param (pvar g) (arrow (tapp list (tname nat)) (tname bool))) "
        "(param (plit (unit))) (param (pwild)) (param (ptuple (pvar x) (pvar y)))) (ident g))))");

  r = parse("let (q, r) = p and _ = 1;;");
  REQUIRE(r.ok());
  CHECK(dump(r.program) ==
        "(program\n  (let (binding (ptuple (pvar q) (pvar r)) (params) (ident p)) (binding (pwild) (params) (int 1))))");
}

TEST_CASE("spans cover the parsed text") {
  std::string code = "let plus (a: nat) (b: nat) : nat =\n  Succ (plus a b)\n";
  ParseResult r = parse(code);
  REQUIRE(r.ok());
  const auto& let = std::get<LetBinding>(r.program.items[0].node);
  const Binding& b = let.bindings[0];
  CHECK(slice(code, b.name_span()) == "plus");
  CHECK(slice(code, b.params[0].span) == "(a: nat)");
  CHECK(slice(code, b.body.span) == "Succ (plus a b)");
  CHECK(slice(code, r.program.items[0].span) == "let plus (a: nat) (b: nat) : nat =\n  Succ (plus a b)");
  const auto* ctor = b.body.as<expr::ConstructorApp>();
  REQUIRE(ctor);
  CHECK(slice(code, ctor->args[0].span) == "(plus a b)");
}

TEST_CASE("syntax error is X010 at the offending token") {
  std::string code = "let x = in";
  ParseResult r = parse(code);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].rule_id == "X010");
  CHECK(slice(code, r.diagnostics[0].span) == "in");
  CHECK(r.diagnostics[0].message == "expected an expression but found `in`");
}

TEST_CASE("error at end of input has an empty span at the end") {
  std::string code = "let f x =";
  ParseResult r = parse(code);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].span == Span{code.size(), code.size()});
  CHECK(r.diagnostics[0].message.find("end of input") != std::string::npos);
}

TEST_CASE("truncated tuple fails at end of input") {
  std::string code = "let x = (1,";
  ParseResult r = parse(code);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].rule_id == "X010");
  CHECK(r.diagnostics[0].span.begin == code.size());
}

TEST_CASE("top-level let ... in is rejected") {
  ParseResult r = parse("let x = 1 in x");
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].message.find("not supported") != std::string::npos);
}

TEST_CASE("recovery resumes at the next top-level definition") {
  ParseResult r = parse("let a = )\nlet b = 1\nlet c = (\ntype t = A\nlet d = let e = 2 in e\n");
  CHECK(r.diagnostics.size() == 2);
  REQUIRE(r.program.items.size() == 3);
  CHECK(std::get<LetBinding>(r.program.items[0].node).bindings[0].name() == "b");
  CHECK(std::holds_alternative<TypeDef>(r.program.items[1].node));
  CHECK(std::get<LetBinding>(r.program.items[2].node).bindings[0].name() == "d");
}

TEST_CASE("unsupported constructs are rejected") {
  CHECK_FALSE(parse("module M = struct end").ok());
  CHECK_FALSE(parse("exception E").ok());
  // Records and labels never get past the lexer.
  CHECK_FALSE(lex("let r = { x = 1 }").ok());
  CHECK_FALSE(lex("let f ~x = x").ok());
}

TEST_SUITE_END();
