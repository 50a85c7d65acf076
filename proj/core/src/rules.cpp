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

#include "boop/rules.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <set>
#include <string>

#include "boop/ocaml/visit.hpp"

namespace boop {
namespace {

using namespace ocaml;

bool is_comparison(std::string_view op) {
  return op == "=" || op == "<>" || op == "<" || op == "<=" || op == ">" || op == ">=" ||
         op == "==" || op == "!=";
}

const Expr& unparen(const Expr& e) {
  const Expr* cur = &e;
  while (const auto* p = cur->as<expr::Paren>()) cur = &*p->inner;
  return *cur;
}

bool is_constant(const Expr& e) {
  const Expr& inner = unparen(e);
  return inner.as<expr::ConstructorApp>() != nullptr || inner.as<expr::Literal>() != nullptr;
}

bool is_anonymous_function(const Expr& e) {
  const Expr& inner = unparen(e);
  return inner.as<expr::Lambda>() != nullptr || inner.as<expr::FunctionMatch>() != nullptr;
}

bool is_unit_pattern(const Pattern& p) {
  const auto* lit = std::get_if<pat::Literal>(&p.node);
  return lit != nullptr && lit->value.kind == Literal::Kind::Unit;
}

class RuleWalker {
 public:
  RuleWalker(const Program& program, const RuleConfig& config) : config_(config) {
    for (const Item& item : program.items) {
      if (const auto* let = std::get_if<LetBinding>(&item.node)) {
        for (const Binding& b : let->bindings) {
          for (std::string& name : bound_names(b.head)) top_level_.insert(std::move(name));
        }
      }
    }
  }

  std::vector<Diagnostic> run(const Program& program) {
    for (const Item& item : program.items) {
      if (const auto* let = std::get_if<LetBinding>(&item.node)) {
        for (const Binding& b : let->bindings) check_annotations(b);
        bindings(let->rec, let->bindings, /*local=*/false);
      }
    }
    sort_diagnostics(out_);
    return std::move(out_);
  }

 private:
  struct Watch {
    std::string_view name;
    bool fired = false;
  };

  void emit(std::string_view rule, Span span, std::string message,
            std::optional<std::string> note = std::nullopt) {
    Severity level = config_.level(rule);
    if (level == Severity::Off) return;
    Diagnostic d = make_diagnostic(rule, span, std::move(message), std::move(note));
    d.severity = level;
    out_.push_back(std::move(d));
  }

  bool bound(std::string_view name) const {
    return std::find(scope_.rbegin(), scope_.rend(), name) != scope_.rend();
  }

  void bind(const Pattern& p) {
    for (std::string& name : bound_names(p)) scope_.push_back(std::move(name));
  }

  void check_annotations(const Binding& b) {
    if (!b.is_function()) return;
    std::vector<std::string> missing;
    for (const Param& p : b.params) {
      if (p.type_annotation || is_unit_pattern(p.pattern)) continue;
      std::vector<std::string> names = bound_names(p.pattern);
      missing.push_back(names.empty() ? std::string("_") : fmt::format("{}", fmt::join(names, ", ")));
    }
    if (missing.empty() && b.return_type) return;
    std::string what;
    if (!missing.empty()) {
      what = fmt::format("parameter{} `{}` {} no type annotation", missing.size() == 1 ? "" : "s",
                         fmt::join(missing, "`, `"), missing.size() == 1 ? "has" : "have");
    }
    if (!b.return_type) {
      if (!what.empty()) what += " and ";
      what += "the return type is not annotated";
    }
    emit("T001", b.name_span(), fmt::format("function `{}`: {}", b.name(), what),
         "annotate every parameter as `(x : t)` and the result as `: t`");
  }

  void bindings(bool rec, const std::vector<Binding>& group, bool local) {
    if (rec) {
      for (const Binding& b : group) bind(b.head);
    }
    for (const Binding& b : group) {
      if (local && function_depth_ > 0 && (b.is_function() || is_anonymous_function(b.body))) {
        std::string_view name = b.name();
        emit("S001", b.name_span(),
             name.empty() ? std::string("nested function defined inside a function body")
                          : fmt::format("nested function `{}` defined inside a function body", name),
             "define helper functions at the top level");
      }
      std::size_t mark = scope_.size();
      for (const Param& p : b.params) bind(p.pattern);
      bool watching = !rec && !b.name().empty();
      if (watching) watches_.push_back(Watch{b.name()});
      function_depth_ += b.is_function() ? 1 : 0;
      expr(b.body);
      function_depth_ -= b.is_function() ? 1 : 0;
      if (watching) {
        if (watches_.back().fired) {
          emit("R001", b.name_span(),
               fmt::format("`{}` refers to itself but is not declared with `rec`", b.name()),
               fmt::format("write `let rec {}`", b.name()));
        }
        watches_.pop_back();
      }
      scope_.resize(mark);
    }
    if (!rec) {
      for (const Binding& b : group) bind(b.head);
    }
  }

  void ident(const expr::Ident& id, Span span) {
    std::string full = id.qualified();
    for (const std::string& prefix : config_.banned_identifier_prefixes) {
      if (full.starts_with(prefix) && !config_.is_allowed(full)) {
        emit("B001", span, fmt::format("use of banned library identifier `{}`", full),
             "implement the operation yourself instead of calling the library");
        break;
      }
    }
    if (!id.module_path.empty()) return;
    if (id.name == "mutable") emit("I001", span, "`mutable` state is not allowed");
    if (bound(id.name)) return;
    for (Watch& w : watches_) {
      if (w.name == id.name) w.fired = true;
    }
    if (!top_level_.contains(id.name) && !config_.is_allowed(id.name)) {
      emit("U001", span, fmt::format("unknown identifier `{}`", id.name),
           "define it before use or check the spelling");
    }
  }

  void arms(const std::vector<MatchArm>& list) {
    for (const MatchArm& arm : list) {
      std::size_t mark = scope_.size();
      bind(arm.pattern);
      expr(arm.body);
      scope_.resize(mark);
    }
  }

  void expr(const Expr& e) {
    std::visit(
        Overloaded{
            [](const expr::Literal&) {},
            [&](const expr::Ident& id) { ident(id, e.span); },
            [&](const expr::ConstructorApp& c) {
              for (const Expr& a : c.args) expr(a);
            },
            [&](const expr::Apply& a) {
              if (const auto* fn = a.fn->as<expr::Ident>(); fn && fn->module_path.empty() && fn->name == "ref") {
                emit("I001", e.span, "mutable reference created with `ref`",
                     "pass the changing value as a parameter of a recursive function");
              }
              expr(*a.fn);
              expr(*a.arg);
            },
            [&](const expr::Lambda& l) {
              emit("S002", e.span, "anonymous function",
                   "define a named top-level function with typed parameters");
              std::size_t mark = scope_.size();
              for (const Param& p : l.params) bind(p.pattern);
              ++function_depth_;
              expr(*l.body);
              --function_depth_;
              scope_.resize(mark);
            },
            [&](const expr::FunctionMatch& f) {
              emit("S002", e.span, "anonymous function (`function`)",
                   "define a named top-level function and `match` on its parameter");
              ++function_depth_;
              arms(f.arms);
              --function_depth_;
            },
            [&](const expr::Match& m) {
              expr(*m.scrutinee);
              arms(m.arms);
            },
            [&](const expr::If& i) {
              check_if(i);
              expr(*i.cond);
              expr(*i.then_branch);
              if (i.else_branch) expr(**i.else_branch);
            },
            [&](const expr::LetIn& l) {
              std::size_t mark = scope_.size();
              bindings(l.rec, l.bindings, /*local=*/true);
              expr(*l.body);
              scope_.resize(mark);
            },
            [&](const expr::Tuple& t) {
              for (const Expr& x : t.elems) expr(x);
            },
            [&](const expr::BinOp& b) {
              operator_rules(b.op, e.span);
              if (b.op == ":=") {
                emit("I001", e.span, "assignment with `:=`",
                     "compute a new value and pass it on instead of reassigning");
              }
              expr(*b.lhs);
              expr(*b.rhs);
            },
            [&](const expr::UnOp& u) {
              operator_rules(u.op, e.span);
              if (u.op == "!") {
                emit("I001", e.span, "dereference with `!`",
                     "use immutable values instead of references");
              }
              expr(*u.operand);
            },
            [&](const expr::Sequence& s) {
              expr(*s.first);
              expr(*s.second);
            },
            [&](const expr::While& w) {
              emit("I002", e.span, "`while` loop", "express the iteration as a recursive function");
              expr(*w.cond);
              expr(*w.body);
            },
            [&](const expr::For& f) {
              emit("I002", e.span, "`for` loop", "express the iteration as a recursive function");
              expr(*f.from);
              expr(*f.to);
              scope_.push_back(f.var);
              expr(*f.body);
              scope_.pop_back();
            },
            [&](const expr::ListLit& l) {
              for (const Expr& x : l.elems) expr(x);
            },
            [&](const expr::Paren& p) { expr(*p.inner); },
        },
        e.node);
  }

  void operator_rules(const std::string& op, Span span) {
    if (std::find(config_.banned_operators.begin(), config_.banned_operators.end(), op) !=
        config_.banned_operators.end()) {
      emit("B002", span, fmt::format("use of banned operator `{}`", op),
           "build the operation from the functions you defined");
    }
  }

  void check_if(const expr::If& i) {
    const Expr& cond = unparen(*i.cond);
    const auto* cmp = cond.as<expr::BinOp>();
    if (cmp && is_comparison(cmp->op) && (is_constant(*cmp->lhs) || is_constant(*cmp->rhs))) {
      emit("C001", i.cond->span,
           fmt::format("`if` tests `{}` against a constructor or literal", cmp->op),
           "use `match` on the value instead");
    } else if (config_.strict_if) {
      emit("C001", i.cond->span, "`if` expression where pattern matching is required",
           "use `match` instead of `if`");
    }
  }

  const RuleConfig& config_;
  std::set<std::string, std::less<>> top_level_;
  std::vector<std::string> scope_;
  std::vector<Watch> watches_;
  int function_depth_ = 0;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> run_rules(const Program& program, const RuleConfig& config) {
  return RuleWalker(program, config).run(program);
}

}  // namespace boop
