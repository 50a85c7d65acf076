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

#include "boop/ocaml/ast.hpp"

namespace boop::ocaml {

/// Renders a program as canonical source. Parentheses are emitted only for
/// explicit `Paren` nodes, for tuples, and where the tree could not be
/// re-read otherwise, so parsing the output of a parsed program gives back
/// the same tree.
std::string pretty_print(const Program& program);

std::string pretty_print(const Expr& expr);
std::string pretty_print(const Pattern& pattern);
std::string pretty_print(const TypeExpr& type);

}  // namespace boop::ocaml
