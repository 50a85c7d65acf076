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
#include <vector>

#include "boop/config.hpp"
#include "boop/diagnostic.hpp"
#include "boop/document.hpp"
#include "boop/ocaml/ast.hpp"

namespace boop {

/// P001 for every required section that is absent, P002 for every required
/// section whose body is blank once comment decoration is removed.
std::vector<Diagnostic> check_completeness(const BoopDocument& document, const RuleConfig& config);

struct ContractMatch {
  std::string name;
  Span binding_span;
};

struct LinkReport {
  std::vector<Diagnostic> diagnostics;  // L001, L002
  std::vector<ContractMatch> matched;
  std::vector<std::string> unmatched_contracts;
  std::vector<std::string> uncontracted_functions;
};

/// Pairs contracts with top-level function definitions by exact name.
LinkReport link_contracts(const std::vector<Contract>& contracts, const ocaml::Program& program);

/// Empty when every marker of at least one configured strategy occurs in the
/// outline; otherwise one L003 naming what the closest strategy lacks.
std::vector<Diagnostic> check_proof_markers(const ProofOutline& outline, const RuleConfig& config);

}  // namespace boop
