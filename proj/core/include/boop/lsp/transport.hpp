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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace boop::lsp {

/// Reads one `Content-Length` framed message body. Returns nullopt at end of
/// input or when the stream ends inside a message. A header block without a
/// usable `Content-Length` yields an empty body.
std::optional<std::string> read_message(std::istream& in);

/// Writes `body` with its `Content-Length` header and flushes.
void write_message(std::ostream& out, std::string_view body);

}  // namespace boop::lsp
