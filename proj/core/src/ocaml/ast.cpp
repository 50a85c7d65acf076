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

#include "boop/ocaml/ast.hpp"

#include "boop/ocaml/visit.hpp"


namespace boop::ocaml {
namespace {

void collect(const Pattern& p, std::vector<std::string>& out) {
  std::visit(Overloaded{
                 [&](const pat::Var& v) { out.push_back(v.name); },
                 [&](const pat::Constructor& c) {
                   for (const Pattern& a : c.args) collect(a, out);
                 },
                 [&](const pat::Tuple& t) {
                   for (const Pattern& e : t.elems) collect(e, out);
                 },
                 [&](const pat::Cons& c) {
                   collect(*c.head, out);
                   collect(*c.tail, out);
                 },
                 [](const auto&) {},
             },
             p.node);
}

std::string literal(const Literal& lit) {
  switch (lit.kind) {
    case Literal::Kind::Int: return "(int " + lit.text + ")";
    case Literal::Kind::Bool: return "(bool " + lit.text + ")";
    case Literal::Kind::String: return "(string \"" + lit.text + "\")";
    case Literal::Kind::Unit: return "(unit)";
  }
  return "(?)";
}

class Dumper {
 public:
  std::string out;

  void type(const TypeExpr& t) {
    std::visit(Overloaded{
                   [&](const ty::Name& n) { out += "(tname " + n.path + ")"; },
                   [&](const ty::App& a) {
                     out += "(tapp " + a.constructor;
                     for (const TypeExpr& arg : a.args) sep(), type(arg);
                     out += ")";
                   },
                   [&](const ty::Arrow& a) {
                     out += "(arrow ";
                     type(*a.from);
                     sep();
                     type(*a.to);
                     out += ")";
                   },
                   [&](const ty::Tuple& tu) {
                     out += "(ttuple";
                     for (const TypeExpr& e : tu.elems) sep(), type(e);
                     out += ")";
                   },
                   [&](const ty::Paren& p) {
                     out += "(tparen ";
                     type(*p.inner);
                     out += ")";
                   },
               },
               t.node);
  }

  void pattern(const Pattern& p) {
    std::visit(Overloaded{
                   [&](const pat::Wildcard&) { out += "(pwild)"; },
                   [&](const pat::Var& v) { out += "(pvar " + v.name + ")"; },
                   [&](const pat::Constructor& c) {
                     out += "(pctor " + c.name;
                     for (const Pattern& a : c.args) sep(), pattern(a);
                     out += ")";
                   },
                   [&](const pat::Tuple& t) {
                     out += "(ptuple";
                     for (const Pattern& e : t.elems) sep(), pattern(e);
                     out += ")";
                   },
                   [&](const pat::Literal& l) { out += "(plit " + literal(l.value) + ")"; },
                   [&](const pat::Cons& c) {
                     out += "(pcons ";
                     pattern(*c.head);
                     sep();
                     pattern(*c.tail);
                     out += ")";
                   },
                   [&](const pat::EmptyList&) { out += "(pnil)"; },
               },
               p.node);
  }

  void param(const Param& p) {
    out += "(param ";
    pattern(p.pattern);
    if (p.type_annotation) sep(), type(*p.type_annotation);
    out += ")";
  }

  void binding(const Binding& b) {
    out += "(binding ";
    pattern(b.head);
    out += " (params";
    for (const Param& p : b.params) sep(), param(p);
    out += ")";
    if (b.return_type) {
      out += " (ret ";
      type(*b.return_type);
      out += ")";
    }
    sep();
    expr(b.body);
    out += ")";
  }

  void arms(const std::vector<MatchArm>& list) {
    for (const MatchArm& arm : list) {
      out += " (arm ";
      pattern(arm.pattern);
      sep();
      expr(arm.body);
      out += ")";
    }
  }

  void expr(const Expr& e) {
    std::visit(Overloaded{
                   [&](const expr::Literal& l) { out += literal(l.value); },
                   [&](const expr::Ident& i) { out += "(ident " + i.qualified() + ")"; },
                   [&](const expr::ConstructorApp& c) {
                     out += "(ctor " + c.name;
                     for (const Expr& a : c.args) sep(), expr(a);
                     out += ")";
                   },
                   [&](const expr::Apply& a) { node("apply", *a.fn, *a.arg); },
                   [&](const expr::Lambda& l) {
                     out += "(fun (params";
                     for (const Param& p : l.params) sep(), param(p);
                     out += ") ";
                     expr(*l.body);
                     out += ")";
                   },
                   [&](const expr::FunctionMatch& f) {
                     out += "(function";
                     arms(f.arms);
                     out += ")";
                   },
                   [&](const expr::Match& m) {
                     out += "(match ";
                     expr(*m.scrutinee);
                     arms(m.arms);
                     out += ")";
                   },
                   [&](const expr::If& i) {
                     out += "(if ";
                     expr(*i.cond);
                     sep();
                     expr(*i.then_branch);
                     if (i.else_branch) sep(), expr(**i.else_branch);
                     out += ")";
                   },
                   [&](const expr::LetIn& l) {
                     out += l.rec ? "(letin rec" : "(letin";
                     for (const Binding& b : l.bindings) sep(), binding(b);
                     sep();
                     expr(*l.body);
                     out += ")";
                   },
                   [&](const expr::Tuple& t) { list("tuple", t.elems); },
                   [&](const expr::BinOp& b) { node("binop " + b.op, *b.lhs, *b.rhs); },
                   [&](const expr::UnOp& u) {
                     out += "(unop " + u.op + " ";
                     expr(*u.operand);
                     out += ")";
                   },
                   [&](const expr::Sequence& s) { node("seq", *s.first, *s.second); },
                   [&](const expr::While& w) { node("while", *w.cond, *w.body); },
                   [&](const expr::For& f) {
                     out += "(for " + f.var + " ";
                     expr(*f.from);
                     out += f.downto ? " downto " : " to ";
                     expr(*f.to);
                     sep();
                     expr(*f.body);
                     out += ")";
                   },
                   [&](const expr::ListLit& l) { list("list", l.elems); },
                   [&](const expr::Paren& p) {
                     out += "(paren ";
                     expr(*p.inner);
                     out += ")";
                   },
               },
               e.node);
  }

  void item(const Item& item) {
    std::visit(Overloaded{
                   [&](const TypeDef& t) {
                     out += "(type " + t.name;
                     for (const ConstructorDecl& c : t.constructors) {
                       out += " (" + c.name;
                       if (c.arg) sep(), type(*c.arg);
                       out += ")";
                     }
                     out += ")";
                   },
                   [&](const LetBinding& l) {
                     out += l.rec ? "(let rec" : "(let";
                     for (const Binding& b : l.bindings) sep(), binding(b);
                     out += ")";
                   },
               },
               item.node);
  }

 private:
  void sep() { out += ' '; }

  void node(const std::string& tag, const Expr& a, const Expr& b) {
    out += "(" + tag + " ";
    expr(a);
    sep();
    expr(b);
    out += ")";
  }

  void list(const char* tag, const std::vector<Expr>& elems) {
    out += "(";
    out += tag;
    for (const Expr& e : elems) sep(), expr(e);
    out += ")";
  }
};

}  // namespace

std::string_view Binding::name() const {
  if (const auto* var = std::get_if<pat::Var>(&head.node)) return var->name;
  return {};
}

std::vector<std::string> bound_names(const Pattern& pattern) {
  std::vector<std::string> out;
  collect(pattern, out);
  return out;
}

std::string dump(const Program& program) {
  Dumper d;
  d.out += "(program";
  for (const Item& item : program.items) {
    d.out += "\n  ";
    d.item(item);
  }
  d.out += ")";
  return d.out;
}

std::string dump(const Expr& e) {
  Dumper d;
  d.expr(e);
  return d.out;
}

std::string dump(const Pattern& p) {
  Dumper d;
  d.pattern(p);
  return d.out;
}

std::string dump(const TypeExpr& t) {
  Dumper d;
  d.type(t);
  return d.out;
}

}  // namespace boop::ocaml
