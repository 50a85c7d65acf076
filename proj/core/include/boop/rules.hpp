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

#include <vector>

#include "boop/config.hpp"
#include "boop/diagnostic.hpp"
#include "boop/ocaml/ast.hpp"

namespace boop {

/// Runs every enabled code rule (B001 through U001) over `program`.
///
/// Each diagnostic carries the level configured for its rule, and the result
/// is sorted by span start and then rule id. Every top-level name counts as
/// known anywhere in the program; local names follow lexical scope.
std::vector<Diagnostic> run_rules(const ocaml::Program& program, const RuleConfig& config);

}  // namespace boop
