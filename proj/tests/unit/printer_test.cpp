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

#include "ast_generator.hpp"
#include "boop/ocaml/lexer.hpp"
#include "boop/ocaml/parser.hpp"
#include "boop/ocaml/printer.hpp"
#include "test_support.hpp"

using namespace boop;
using namespace boop::ocaml;

namespace {

Program parse_ok(std::string_view code) {
  LexResult lexed = lex(code);
  INFO(code);
  REQUIRE(lexed.ok());
  ParseResult parsed = parse_program(lexed.tokens);
  REQUIRE(parsed.diagnostics.empty());
  return std::move(parsed.program);
}

Expr expr_ok(std::string_view code) {
  LexResult lexed = lex(code);
  REQUIRE(lexed.ok());
  ExprParseResult parsed = parse_expression(lexed.tokens);
  INFO(code);
  REQUIRE(parsed.diagnostics.empty());
  REQUIRE(parsed.expr);
  return std::move(*parsed.expr);
}

std::string reprint(std::string_view code) { return pretty_print(expr_ok(code)); }

Expr ident(std::string name) { return Expr{expr::Ident{"", std::move(name)}, {}}; }
Expr binop(std::string op, Expr lhs, Expr rhs) {
  return Expr{expr::BinOp{std::move(op), std::move(lhs), std::move(rhs)}, {}};
}
Expr apply(Expr fn, Expr arg) { return Expr{expr::Apply{std::move(fn), std::move(arg)}, {}}; }
Expr seq(Expr a, Expr b) { return Expr{expr::Sequence{std::move(a), std::move(b)}, {}}; }
Expr if_then(Expr c, Expr t) { return Expr{expr::If{std::move(c), std::move(t), std::nullopt}, {}}; }

int count_of(std::string_view haystack, std::string_view needle) {
  int n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string_view::npos; pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE_BEGIN("printer");

TEST_CASE("simple expressions print as written") {
  CHECK(reprint("Succ (plus a' b)") == "Succ (plus a' b)");
  CHECK(reprint("(Zero, a)") == "(Zero, a)");
  CHECK(reprint("minus !r b") == "minus !r b");
  CHECK(reprint("not (less_than !r b)") == "not (less_than !r b)");
  CHECK(reprint("a + b * c") == "a + b * c");
  CHECK(reprint("[1; 2; 3]") == "[1; 2; 3]");
  CHECK(reprint("- (-x)") == "-(-x)");
  CHECK(reprint("List.rev xs") == "List.rev xs");
}

TEST_CASE("parentheses are added only where the tree needs them") {
  CHECK(pretty_print(binop("*", binop("+", ident("a"), ident("b")), ident("c"))) == "(a + b) * c");
  CHECK(pretty_print(binop("-", ident("a"), binop("-", ident("b"), ident("c")))) == "a - (b - c)");
  CHECK(pretty_print(binop("-", binop("-", ident("a"), ident("b")), ident("c"))) == "a - b - c");
  CHECK(pretty_print(apply(ident("f"), apply(ident("g"), ident("x")))) == "f (g x)");
  CHECK(pretty_print(binop(":=", ident("r"), seq(ident("a"), ident("b")))) == "r := (a;\nb)");

  // A dangling `if` would capture a following `else`.
  Expr nested{expr::If{ident("c"), if_then(ident("d"), ident("x")), Box<Expr>(ident("y"))}, {}};
  std::string printed = pretty_print(nested);
  CHECK(printed == "if c then (if d then x) else y");
  CHECK(dump(expr_ok(printed)).find("(paren (if (ident d) (ident x)))") != std::string::npos);
}

TEST_CASE("corpus programs survive a print and re-parse unchanged") {
  for (const auto& listing : boop::testing::corpus_programs()) {
    INFO(listing.name);
    Program original = parse_ok(listing.code);
    std::string printed = pretty_print(original);
    INFO(printed);
    Program again = parse_ok(printed);
    CHECK(dump(again) == dump(original));
    CHECK(pretty_print(again) == printed);
  }
}

TEST_CASE("imperative constructs are preserved") {
  std::string code = boop::testing::code_section(boop::testing::read_fixture("imperative_div.boop"));
  Program program = parse_ok(code);
  std::string printed = pretty_print(program);
  CHECK(count_of(printed, "while ") == count_of(code, "while "));
  CHECK(count_of(printed, ":=") == count_of(code, ":="));
  CHECK(count_of(printed, " ref ") == count_of(code, " ref "));
  CHECK(count_of(printed, "done") == count_of(code, "done"));
}

TEST_CASE("printed programs use the canonical layout") {
  Program p = parse_ok("type nat = Zero | Succ of nat let rec plus (a: nat) (b: nat) : nat = match a with Zero -> b | Succ a' -> Succ (plus a' b)");
  CHECK(pretty_print(p) ==
        "type nat =\n"
        "  | Zero\n"
        "  | Succ of nat\n"
        "\n"
        "let rec plus (a : nat) (b : nat) : nat =\n"
        "  match a with\n"
        "  | Zero -> b\n"
        "  | Succ a' -> Succ (plus a' b)\n");
}

TEST_CASE("random programs round-trip through the printer") {
  // A generated tree may differ from its parse (redundant Paren nodes are
  // absent), so the fixed point is taken from the first re-parse.
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    Program generated = boop::testing::random_program(seed);
    std::string first = pretty_print(generated);
    INFO("seed " << seed << "\n" << first);
    LexResult lexed = lex(first);
    REQUIRE(lexed.ok());
    ParseResult parsed = parse_program(lexed.tokens);
    REQUIRE(parsed.diagnostics.empty());
    std::string second = pretty_print(parsed.program);
    Program reparsed = parse_ok(second);
    CHECK(dump(reparsed) == dump(parsed.program));
    CHECK(pretty_print(reparsed) == second);
  }
}

TEST_CASE("generated programs are reproducible from their seed") {
  CHECK(dump(boop::testing::random_program(42)) == dump(boop::testing::random_program(42)));
  CHECK(dump(boop::testing::random_program(42)) != dump(boop::testing::random_program(43)));
}

TEST_SUITE_END();
