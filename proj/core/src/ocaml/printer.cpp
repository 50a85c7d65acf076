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

#include "boop/ocaml/printer.hpp"

#include <string_view>

#include "boop/ocaml/visit.hpp"

namespace boop::ocaml {
namespace {

// Expression levels, loosest first. A node printed where a tighter level is
// required gets parentheses.
enum Level : int {
  kSeq,
  kAssign,
  kTuple,
  kOr,
  kAnd,
  kCompare,
  kConcat,
  kAdd,
  kMul,
  kUnary,
  kApp,
  kPrefix,
  kAtom,
};

// What may follow a node in its context. Constructs that extend to the right
// (`let`, `match`, `fun`, `function`, `if`) would absorb these tokens.
enum Tail : unsigned {
  kNone = 0,
  kOps = 1,   // a binary operator, `,` or `:=`
  kElse = 2,  // the `else` of an enclosing `if`
  kBar = 4,   // the next `|` arm of an enclosing match
  kSemi = 8,  // `;`
};

struct OpInfo {
  int level;
  bool right;
};

OpInfo op_info(std::string_view op) {
  if (op == ":=") return {kAssign, true};
  if (op == "||") return {kOr, true};
  if (op == "&&") return {kAnd, true};
  if (op == "@" || op == "^" || op == "::") return {kConcat, true};
  if (op == "+" || op == "-") return {kAdd, false};
  if (op == "*" || op == "/" || op == "mod") return {kMul, false};
  return {kCompare, false};
}

enum PatternLevel : int { kPTuple, kPCons, kPApp, kPAtom };
enum TypeLevel : int { kTArrow, kTTuple, kTApp, kTAtom };

std::string literal(const Literal& lit) {
  switch (lit.kind) {
    case Literal::Kind::Int:
    case Literal::Kind::Bool:
      return lit.text;
    case Literal::Kind::String:
      return "\"" + lit.text + "\"";
    case Literal::Kind::Unit:
      return "()";
  }
  return "()";
}

class Printer {
 public:
  std::string out;

  void type(const TypeExpr& t, int min) {
    std::visit(Overloaded{
                   [&](const ty::Name& n) { out += n.path; },
                   [&](const ty::App& a) {
                     bool paren = min > kTApp;
                     open(paren);
                     if (a.args.size() == 1) {
                       type(a.args.front(), kTApp);
                     } else {
                       out += "(";
                       for (std::size_t i = 0; i < a.args.size(); ++i) {
                         if (i) out += ", ";
                         type(a.args[i], kTArrow);
                       }
                       out += ")";
                     }
                     out += " " + a.constructor;
                     close(paren);
                   },
                   [&](const ty::Arrow& a) {
                     bool paren = min > kTArrow;
                     open(paren);
                     type(*a.from, kTTuple);
                     out += " -> ";
                     type(*a.to, kTArrow);
                     close(paren);
                   },
                   [&](const ty::Tuple& tu) {
                     bool paren = min > kTTuple;
                     open(paren);
                     for (std::size_t i = 0; i < tu.elems.size(); ++i) {
                       if (i) out += " * ";
                       type(tu.elems[i], kTApp);
                     }
                     close(paren);
                   },
                   [&](const ty::Paren& p) {
                     out += "(";
                     type(*p.inner, kTArrow);
                     out += ")";
                   },
               },
               t.node);
  }

  void pattern(const Pattern& p, int min) {
    std::visit(Overloaded{
                   [&](const pat::Wildcard&) { out += "_"; },
                   [&](const pat::Var& v) { out += v.name; },
                   [&](const pat::Constructor& c) {
                     bool paren = !c.args.empty() && min > kPApp;
                     open(paren);
                     out += c.name;
                     for (const Pattern& a : c.args) {
                       out += " ";
                       pattern(a, kPAtom);
                     }
                     close(paren);
                   },
                   [&](const pat::Tuple& t) {
                     out += "(";
                     for (std::size_t i = 0; i < t.elems.size(); ++i) {
                       if (i) out += ", ";
                       pattern(t.elems[i], kPCons);
                     }
                     out += ")";
                   },
                   [&](const pat::Literal& l) { out += literal(l.value); },
                   [&](const pat::Cons& c) {
                     bool paren = min > kPCons;
                     open(paren);
                     pattern(*c.head, kPApp);
                     out += " :: ";
                     pattern(*c.tail, kPCons);
                     close(paren);
                   },
                   [&](const pat::EmptyList&) { out += "[]"; },
               },
               p.node);
  }

  void param(const Param& p) {
    if (p.type_annotation) {
      out += "(";
      pattern(p.pattern, kPTuple);
      out += " : ";
      type(*p.type_annotation, kTArrow);
      out += ")";
      return;
    }
    bool bare = std::holds_alternative<pat::Var>(p.pattern.node) ||
                std::holds_alternative<pat::Wildcard>(p.pattern.node) ||
                std::holds_alternative<pat::Tuple>(p.pattern.node);
    if (const auto* lit = std::get_if<pat::Literal>(&p.pattern.node)) {
      bare = lit->value.kind == Literal::Kind::Unit;
    }
    open(!bare);
    pattern(p.pattern, kPTuple);
    close(!bare);
  }

  void binding(const Binding& b, int indent, bool top_level) {
    pattern(b.head, kPTuple);
    for (const Param& p : b.params) {
      out += " ";
      param(p);
    }
    if (b.return_type) {
      out += " : ";
      type(*b.return_type, kTArrow);
    }
    out += " =";
    if (top_level) {
      newline(indent + 2);
      expr(b.body, kSeq, kNone, indent + 2);
    } else {
      out += " ";
      expr(b.body, kSeq, kNone, indent + 2);
    }
  }

  void arms(const std::vector<MatchArm>& list, unsigned tail, int indent) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      newline(indent);
      out += "| ";
      pattern(list[i].pattern, kPTuple);
      out += " -> ";
      bool last = i + 1 == list.size();
      expr(list[i].body, kSeq, last ? tail : kBar, indent + 4);
    }
  }

  void expr(const Expr& e, int min, unsigned tail, int indent) {
    std::visit(Overloaded{
                   [&](const expr::Literal& l) { out += literal(l.value); },
                   [&](const expr::Ident& i) { out += i.qualified(); },
                   [&](const expr::ConstructorApp& c) {
                     bool paren = !c.args.empty() && min > kApp;
                     open(paren);
                     out += c.name;
                     for (const Expr& a : c.args) {
                       out += " ";
                       expr(a, kPrefix, kNone, indent);
                     }
                     close(paren);
                   },
                   [&](const expr::Apply& a) {
                     bool paren = min > kApp;
                     open(paren);
                     expr(*a.fn, kApp, kOps, indent);
                     out += " ";
                     expr(*a.arg, kPrefix, paren ? kNone : tail, indent);
                     close(paren);
                   },
                   [&](const expr::Lambda& l) {
                     bool paren = open_ended(min, tail, kOps | kSemi);
                     open(paren);
                     out += "fun";
                     for (const Param& p : l.params) {
                       out += " ";
                       param(p);
                     }
                     out += " -> ";
                     expr(*l.body, kSeq, paren ? kNone : tail, indent);
                     close(paren);
                   },
                   [&](const expr::FunctionMatch& f) {
                     bool paren = open_ended(min, tail, kOps | kSemi | kBar);
                     open(paren);
                     out += "function";
                     arms(f.arms, paren ? kNone : tail, indent);
                     close(paren);
                   },
                   [&](const expr::Match& m) {
                     bool paren = open_ended(min, tail, kOps | kSemi | kBar);
                     open(paren);
                     out += "match ";
                     expr(*m.scrutinee, kSeq, kNone, indent);
                     out += " with";
                     arms(m.arms, paren ? kNone : tail, indent);
                     close(paren);
                   },
                   [&](const expr::If& i) {
                     unsigned absorbs = i.else_branch ? kOps : (kOps | kElse);
                     bool paren = open_ended(min, tail, absorbs);
                     unsigned rest = paren ? kNone : tail;
                     open(paren);
                     out += "if ";
                     expr(*i.cond, kSeq, kNone, indent);
                     out += " then ";
                     expr(*i.then_branch, kAssign, i.else_branch ? (rest | kElse) : rest, indent);
                     if (i.else_branch) {
                       out += " else ";
                       expr(**i.else_branch, kAssign, rest, indent);
                     }
                     close(paren);
                   },
                   [&](const expr::LetIn& l) {
                     bool paren = open_ended(min, tail, kOps | kSemi);
                     open(paren);
                     out += l.rec ? "let rec " : "let ";
                     for (std::size_t i = 0; i < l.bindings.size(); ++i) {
                       if (i) out += " and ";
                       binding(l.bindings[i], indent, false);
                     }
                     out += " in";
                     newline(indent);
                     expr(*l.body, kSeq, paren ? kNone : tail, indent);
                     close(paren);
                   },
                   [&](const expr::Tuple& t) {
                     out += "(";
                     for (std::size_t i = 0; i < t.elems.size(); ++i) {
                       if (i) out += ", ";
                       bool last = i + 1 == t.elems.size();
                       expr(t.elems[i], kOr, last ? kNone : kOps, indent);
                     }
                     out += ")";
                   },
                   [&](const expr::BinOp& b) {
                     OpInfo info = op_info(b.op);
                     bool paren = min > info.level;
                     unsigned rest = paren ? kNone : tail;
                     open(paren);
                     int lhs_level = info.right ? info.level + 1 : info.level;
                     int rhs_level = info.right ? info.level : info.level + 1;
                     if (b.op == ":=") lhs_level = kTuple;
                     expr(*b.lhs, lhs_level, kOps, indent);
                     out += " " + b.op + " ";
                     expr(*b.rhs, rhs_level, rest, indent);
                     close(paren);
                   },
                   [&](const expr::UnOp& u) {
                     if (u.op == "!") {
                       bool paren = min > kPrefix;
                       open(paren);
                       out += "!";
                       expr(*u.operand, kPrefix, paren ? kNone : tail, indent);
                       close(paren);
                       return;
                     }
                     bool paren = min > kUnary;
                     open(paren);
                     out += u.op == "not" ? "not " : "-";
                     std::size_t mark = out.size();
                     expr(*u.operand, kUnary, paren ? kNone : tail, indent);
                     if (u.op == "-" && mark < out.size() && out[mark] == '-') out.insert(mark, " ");
                     close(paren);
                   },
                   [&](const expr::Sequence& s) {
                     bool paren = min > kSeq;
                     open(paren);
                     expr(*s.first, kAssign, kSemi, indent);
                     out += ";";
                     newline(indent);
                     expr(*s.second, kSeq, paren ? kNone : tail, indent);
                     close(paren);
                   },
                   [&](const expr::While& w) {
                     out += "while ";
                     expr(*w.cond, kSeq, kNone, indent);
                     out += " do";
                     newline(indent + 2);
                     expr(*w.body, kSeq, kNone, indent + 2);
                     newline(indent);
                     out += "done";
                   },
                   [&](const expr::For& f) {
                     out += "for " + f.var + " = ";
                     expr(*f.from, kSeq, kNone, indent);
                     out += f.downto ? " downto " : " to ";
                     expr(*f.to, kSeq, kNone, indent);
                     out += " do";
                     newline(indent + 2);
                     expr(*f.body, kSeq, kNone, indent + 2);
                     newline(indent);
                     out += "done";
                   },
                   [&](const expr::ListLit& l) {
                     out += "[";
                     for (std::size_t i = 0; i < l.elems.size(); ++i) {
                       if (i) out += "; ";
                       bool last = i + 1 == l.elems.size();
                       expr(l.elems[i], kAssign, last ? kNone : kSemi, indent);
                     }
                     out += "]";
                   },
                   [&](const expr::Paren& p) {
                     out += "(";
                     expr(*p.inner, kSeq, kNone, indent);
                     out += ")";
                   },
               },
               e.node);
  }

  void item(const Item& item) {
    std::visit(Overloaded{
                   [&](const TypeDef& t) {
                     out += "type " + t.name + " =";
                     for (const ConstructorDecl& c : t.constructors) {
                       out += "\n  | " + c.name;
                       if (c.arg) {
                         out += " of ";
                         type(*c.arg, kTArrow);
                       }
                     }
                   },
                   [&](const LetBinding& l) {
                     out += l.rec ? "let rec " : "let ";
                     for (std::size_t i = 0; i < l.bindings.size(); ++i) {
                       if (i) out += "\nand ";
                       binding(l.bindings[i], 0, true);
                     }
                   },
               },
               item.node);
  }

 private:
  static bool open_ended(int min, unsigned tail, unsigned absorbs) {
    return min > kUnary || (tail & absorbs) != 0;
  }

  void open(bool paren) {
    if (paren) out += "(";
  }
  void close(bool paren) {
    if (paren) out += ")";
  }
  void newline(int indent) {
    out += "\n";
    out.append(static_cast<std::size_t>(indent), ' ');
  }
};

}  // namespace

std::string pretty_print(const Program& program) {
  Printer p;
  for (const Item& item : program.items) {
    if (!p.out.empty()) p.out += "\n\n";
    p.item(item);
  }
  if (!p.out.empty()) p.out += "\n";
  return p.out;
}

std::string pretty_print(const Expr& expr) {
  Printer p;
  p.expr(expr, kSeq, kNone, 0);
  return p.out;
}

std::string pretty_print(const Pattern& pattern) {
  Printer p;
  p.pattern(pattern, kPTuple);
  return p.out;
}

std::string pretty_print(const TypeExpr& type) {
  Printer p;
  p.type(type, kTArrow);
  return p.out;
}

}  // namespace boop::ocaml
