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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "boop/config.hpp"
#include "boop/diagnostic.hpp"
#include "boop/document.hpp"
#include "boop/linker.hpp"
#include "boop/ocaml/ast.hpp"

namespace boop {

struct CheckResult {
  std::string file;
  std::string source;
  std::vector<Diagnostic> diagnostics;  // sorted, positions resolved, none at level Off
  std::size_t error_count = 0;
  std::size_t warn_count = 0;
};

/// Everything the pipeline learned about one submission, for callers that
/// need more than the diagnostics (the language server, tests).
struct Analysis {
  BoopDocument document;
  std::vector<Contract> contracts;
  OperationSteps steps;
  std::optional<ProofOutline> proof;
  std::optional<ocaml::Program> program;  // set when the code phase parsed cleanly
  std::optional<LinkReport> links;
  std::vector<Diagnostic> diagnostics;
};

/// Runs the whole pipeline on an in-memory submission: section split,
/// blueprint/operations/proof parsing, code lexing and parsing, code rules,
/// completeness, contract linking and proof markers. Lexer or parser errors
/// in the code phase skip the code rules and contract linking.
Analysis analyze(std::string_view source, const RuleConfig& config);

CheckResult check_source(std::string file, std::string source, const RuleConfig& config);

/// Reads and checks `path`; an unreadable file yields a single F001.
CheckResult check_file(const std::filesystem::path& path, const RuleConfig& config);

}  // namespace boop
