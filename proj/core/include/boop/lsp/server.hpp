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
#include <iosfwd>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "boop/config.hpp"

namespace boop::lsp {

struct StoredDocument {
  long long version = 0;
  std::string text;
};

/// Open documents keyed by URI. Readers may run concurrently; writers are
/// exclusive. Versions only move forward.
class DocumentStore {
 public:
  void open(const std::string& uri, long long version, std::string text);

  enum class Update { Applied, Stale, Unknown };
  Update change(const std::string& uri, long long version, std::string text);

  bool close(const std::string& uri);
  std::optional<StoredDocument> get(const std::string& uri) const;
  std::vector<std::string> uris() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, StoredDocument> docs_;
};

/// Maps a `file://` URI to a local path; nullopt for other schemes.
std::optional<std::filesystem::path> path_from_uri(std::string_view uri);

struct ServerOptions {
  // Used for every document instead of searching for `boop.config.json`.
  std::optional<std::filesystem::path> config_path;
};

/// Language server for BOOP submissions.
///
/// `handle` takes one decoded JSON-RPC message and returns the messages to
/// send back (responses, `textDocument/publishDiagnostics` and
/// `window/logMessage` notifications), which keeps the protocol logic
/// independent of the transport.
class Server {
 public:
  explicit Server(ServerOptions options = {});

  std::vector<nlohmann::json> handle(const nlohmann::json& message);

  bool exited() const { return exited_; }
  // 0 after `shutdown` then `exit`; 1 when the session ends any other way.
  int exit_code() const { return exited_ && shutdown_ ? 0 : 1; }

  /// Serves framed messages from `in` until `exit` or end of input.
  int run(std::istream& in, std::ostream& out);

 private:
  using json = nlohmann::json;

  json request(const std::string& method, const json& params);
  void notification(const std::string& method, const json& params, std::vector<json>& out);
  void publish(const std::string& uri, std::vector<json>& out);
  RuleConfig config_for(const std::string& uri, std::vector<json>& out);

  ServerOptions options_;
  DocumentStore store_;
  bool initialized_ = false;
  bool shutdown_ = false;
  bool exited_ = false;

  struct CachedConfig {
    std::filesystem::file_time_type mtime;
    RuleConfig config;
  };
  std::mutex config_mutex_;
  std::map<std::filesystem::path, CachedConfig> config_cache_;
};

}  // namespace boop::lsp
