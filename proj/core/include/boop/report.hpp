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

#include "boop/check.hpp"
#include "boop/document.hpp"

namespace boop {

/// Compiler-style text: a block per diagnostic with the covered source lines
/// underlined by carets, then an `N errors, M warnings` summary line.
std::string render_human(const CheckResult& result);

/// One compact JSON object (no trailing newline) with keys in a fixed order.
std::string render_json(const CheckResult& result);

/// The four section kinds in canonical order with their status, either as
/// `kind: status` lines (`json == false`) or as one JSON object.
std::string render_sections(const BoopDocument& document, bool json);

}  // namespace boop
