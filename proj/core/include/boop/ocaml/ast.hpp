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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "boop/span.hpp"

namespace boop::ocaml {

// Heap-allocated value with deep-copy semantics, for recursive AST members.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

 private:
  std::unique_ptr<T> ptr_;
};

struct Literal {
  enum class Kind { Int, Bool, String, Unit };
  Kind kind = Kind::Unit;
  // Source spelling: digits, `true`/`false`, the raw string contents
  // (escapes untouched, quotes excluded), or empty for unit.
  std::string text;
};

// ---------------------------------------------------------------------------
// Types

struct TypeExpr;

namespace ty {
struct Name {
  std::string path;  // `nat`, `bool`, `List.t`
};
// Postfix application: `nat list` is App{"list", {nat}}.
struct App {
  std::string constructor;
  std::vector<TypeExpr> args;
};
struct Arrow {
  Box<TypeExpr> from;
  Box<TypeExpr> to;
};
struct Tuple {
  std::vector<TypeExpr> elems;
};
struct Paren {
  Box<TypeExpr> inner;
};
}  // namespace ty

struct TypeExpr {
  std::variant<ty::Name, ty::App, ty::Arrow, ty::Tuple, ty::Paren> node;
  Span span;
};

// ---------------------------------------------------------------------------
// Patterns

struct Pattern;

namespace pat {
struct Wildcard {};
struct Var {
  std::string name;
};
struct Constructor {
  std::string name;
  std::vector<Pattern> args;  // zero or one, as written
};
struct Tuple {
  std::vector<Pattern> elems;
};
struct Literal {
  ocaml::Literal value;
};
struct Cons {
  Box<Pattern> head;
  Box<Pattern> tail;
};
struct EmptyList {};
}  // namespace pat

struct Pattern {
  std::variant<pat::Wildcard, pat::Var, pat::Constructor, pat::Tuple, pat::Literal, pat::Cons,
               pat::EmptyList>
      node;
  Span span;
};

// ---------------------------------------------------------------------------
// Expressions

struct Expr;
struct MatchArm;
struct Binding;

struct Param {
  Pattern pattern;
  std::optional<TypeExpr> type_annotation;
  Span span;
};

namespace expr {
struct Literal {
  ocaml::Literal value;
};
struct Ident {
  std::string module_path;  // empty when unqualified
  std::string name;

  std::string qualified() const { return module_path.empty() ? name : module_path + "." + name; }
};
struct ConstructorApp {
  std::string name;
  std::vector<Expr> args;  // zero or one
};
struct Apply {
  Box<Expr> fn;
  Box<Expr> arg;
};
struct Lambda {
  std::vector<Param> params;
  Box<Expr> body;
};
struct FunctionMatch {
  std::vector<MatchArm> arms;
};
struct Match {
  Box<Expr> scrutinee;
  std::vector<MatchArm> arms;
};
struct If {
  Box<Expr> cond;
  Box<Expr> then_branch;
  std::optional<Box<Expr>> else_branch;
};
struct LetIn {
  bool rec = false;
  std::vector<Binding> bindings;
  Box<Expr> body;
};
struct Tuple {
  std::vector<Expr> elems;
};
struct BinOp {
  std::string op;  // verbatim source symbol: `+`, `:=`, `mod`, `::`, ...
  Box<Expr> lhs;
  Box<Expr> rhs;
};
struct UnOp {
  std::string op;  // `!`, `not` or `-`
  Box<Expr> operand;
};
struct Sequence {
  Box<Expr> first;
  Box<Expr> second;
};
struct While {
  Box<Expr> cond;
  Box<Expr> body;
};
struct For {
  std::string var;
  Box<Expr> from;
  bool downto = false;
  Box<Expr> to;
  Box<Expr> body;
};
struct ListLit {
  std::vector<Expr> elems;
};
// Explicit `( e )` or `begin e end`. Parenthesized tuples are plain Tuples.
struct Paren {
  Box<Expr> inner;
};
}  // namespace expr

struct Expr {
  std::variant<expr::Literal, expr::Ident, expr::ConstructorApp, expr::Apply, expr::Lambda,
               expr::FunctionMatch, expr::Match, expr::If, expr::LetIn, expr::Tuple, expr::BinOp,
               expr::UnOp, expr::Sequence, expr::While, expr::For, expr::ListLit, expr::Paren>
      node;
  Span span;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
};

struct MatchArm {
  Pattern pattern;
  Expr body;
  Span span;
};

/// `name params : return_type = body`, or `pattern = body` for a
/// destructuring value binding. Zero params means a value binding.
struct Binding {
  Pattern head;
  std::vector<Param> params;
  std::optional<TypeExpr> return_type;
  Expr body;
  Span span;

  // Name for a simple `let f ...` head; empty for destructuring patterns.
  std::string_view name() const;
  Span name_span() const { return head.span; }
  bool is_function() const { return !params.empty(); }
};

// ---------------------------------------------------------------------------
// Items

struct ConstructorDecl {
  std::string name;
  std::optional<TypeExpr> arg;
  Span span;
};

struct TypeDef {
  std::string name;
  std::vector<ConstructorDecl> constructors;
  Span span;
};

struct LetBinding {
  bool rec = false;
  std::vector<Binding> bindings;  // non-empty
  Span span;

  bool and_chained() const { return bindings.size() > 1; }
};

struct Item {
  std::variant<TypeDef, LetBinding> node;
  Span span;
};

struct Program {
  std::vector<Item> items;
};

/// Names bound by a pattern, in left-to-right order.
std::vector<std::string> bound_names(const Pattern& pattern);

/// S-expression rendering of the tree without spans; two programs are
/// structurally equal exactly when their dumps are equal.
std::string dump(const Program& program);
std::string dump(const Expr& expr);
std::string dump(const Pattern& pattern);
std::string dump(const TypeExpr& type);

}  // namespace boop::ocaml
