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

#include "boop/lsp/server.hpp"

#include <array>
#include <fstream>
#include <istream>

#include "boop/check.hpp"
#include "boop/lsp/transport.hpp"
#include "boop/source.hpp"

namespace boop::lsp {
namespace {

using json = nlohmann::json;

constexpr int kParseError = -32700;
constexpr int kInvalidRequest = -32600;
constexpr int kMethodNotFound = -32601;
constexpr int kInvalidParams = -32602;
constexpr int kServerNotInitialized = -32002;

struct RpcError {
  int code;
  std::string message;
};

json error_response(const json& id, int code, const std::string& message) {
  return {{"jsonrpc", "2.0"}, {"id", id}, {"error", {{"code", code}, {"message", message}}}};
}

json log_message(int type, const std::string& message) {
  return {{"jsonrpc", "2.0"},
          {"method", "window/logMessage"},
          {"params", {{"type", type}, {"message", message}}}};
}

const json& field(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw RpcError{kInvalidParams, std::string("missing `") + key + "`"};
  }
  return object.at(key);
}

std::string uri_of(const json& params) {
  const json& uri = field(field(params, "textDocument"), "uri");
  if (!uri.is_string()) throw RpcError{kInvalidParams, "`uri` must be a string"};
  return uri.get<std::string>();
}

json position(const LineIndex& index, std::size_t offset) {
  Utf16Position p = index.utf16_position(offset);
  return {{"line", p.line}, {"character", p.character}};
}

int hex(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

// ---------------------------------------------------------------------------
// DocumentStore

void DocumentStore::open(const std::string& uri, long long version, std::string text) {
  std::unique_lock lock(mutex_);
  docs_[uri] = StoredDocument{version, std::move(text)};
}

DocumentStore::Update DocumentStore::change(const std::string& uri, long long version, std::string text) {
  std::unique_lock lock(mutex_);
  auto it = docs_.find(uri);
  if (it == docs_.end()) return Update::Unknown;
  if (version < it->second.version) return Update::Stale;
  it->second = StoredDocument{version, std::move(text)};
  return Update::Applied;
}

bool DocumentStore::close(const std::string& uri) {
  std::unique_lock lock(mutex_);
  return docs_.erase(uri) > 0;
}

std::optional<StoredDocument> DocumentStore::get(const std::string& uri) const {
  std::shared_lock lock(mutex_);
  auto it = docs_.find(uri);
  if (it == docs_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> DocumentStore::uris() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [uri, doc] : docs_) out.push_back(uri);
  return out;
}

std::optional<std::filesystem::path> path_from_uri(std::string_view uri) {
  constexpr std::string_view kScheme = "file://";
  if (!uri.starts_with(kScheme)) return std::nullopt;
  uri.remove_prefix(kScheme.size());
  std::string decoded;
  for (std::size_t i = 0; i < uri.size(); ++i) {
    if (uri[i] == '%' && i + 2 < uri.size() && hex(uri[i + 1]) >= 0 && hex(uri[i + 2]) >= 0) {
      decoded += static_cast<char>(hex(uri[i + 1]) * 16 + hex(uri[i + 2]));
      i += 2;
    } else {
      decoded += uri[i];
    }
  }
  return std::filesystem::path(decoded);
}

// ---------------------------------------------------------------------------
// Server

Server::Server(ServerOptions options) : options_(std::move(options)) {}

std::vector<json> Server::handle(const json& message) {
  std::vector<json> out;
  if (!message.is_object() || !message.contains("method")) {
    if (message.is_object() && message.contains("id")) return out;  // a client response
    out.push_back(error_response(nullptr, kInvalidRequest, "not a JSON-RPC request"));
    return out;
  }
  const json& method_field = message["method"];
  if (!method_field.is_string()) {
    out.push_back(error_response(message.value("id", json()), kInvalidRequest, "`method` must be a string"));
    return out;
  }
  std::string method = method_field.get<std::string>();
  json params = message.value("params", json::object());

  if (!message.contains("id")) {
    try {
      notification(method, params, out);
    } catch (const RpcError& e) {
      out.push_back(log_message(1, method + ": " + e.message));
    } catch (const json::exception& e) {
      out.push_back(log_message(1, method + ": " + e.what()));
    }
    return out;
  }

  const json& id = message["id"];
  try {
    if (method == "initialize") {
      if (initialized_) throw RpcError{kInvalidRequest, "server is already initialized"};
      initialized_ = true;
      out.push_back({{"jsonrpc", "2.0"},
                     {"id", id},
                     {"result",
                      {{"capabilities", {{"textDocumentSync", 1}}},
                       {"serverInfo", {{"name", "boop"}, {"version", "0.1.0"}}}}}});
      return out;
    }
    if (!initialized_) throw RpcError{kServerNotInitialized, "server is not initialized"};
    if (shutdown_) throw RpcError{kInvalidRequest, "server is shutting down"};
    out.push_back({{"jsonrpc", "2.0"}, {"id", id}, {"result", request(method, params)}});
  } catch (const RpcError& e) {
    out.push_back(error_response(id, e.code, e.message));
  } catch (const json::exception& e) {
    out.push_back(error_response(id, kInvalidParams, e.what()));
  }
  return out;
}

json Server::request(const std::string& method, const json& params) {
  if (method == "shutdown") {
    shutdown_ = true;
    return nullptr;
  }
  if (method == "boop/phaseStatus") {
    std::string uri = uri_of(params);
    std::optional<StoredDocument> doc = store_.get(uri);
    if (!doc) throw RpcError{kInvalidParams, "unknown document " + uri};
    std::array<SectionStatus, 4> statuses = section_statuses(split_sections(doc->text).document);
    json result = json::object();
    for (std::size_t i = 0; i < kAllSectionKinds.size(); ++i) {
      result[std::string(to_string(kAllSectionKinds[i]))] = to_string(statuses[i]);
    }
    return result;
  }
  throw RpcError{kMethodNotFound, "unsupported method " + method};
}

void Server::notification(const std::string& method, const json& params, std::vector<json>& out) {
  if (method == "exit") {
    exited_ = true;
    return;
  }
  if (!initialized_ || shutdown_) return;

  if (method == "textDocument/didOpen") {
    const json& doc = field(params, "textDocument");
    std::string uri = uri_of(params);
    store_.open(uri, doc.value("version", 0LL), field(doc, "text").get<std::string>());
    publish(uri, out);
  } else if (method == "textDocument/didChange") {
    std::string uri = uri_of(params);
    const json& changes = field(params, "contentChanges");
    if (!changes.is_array() || changes.empty()) return;
    long long version = params["textDocument"].value("version", 0LL);
    std::string text = field(changes.back(), "text").get<std::string>();
    switch (store_.change(uri, version, std::move(text))) {
      case DocumentStore::Update::Applied:
        publish(uri, out);
        break;
      case DocumentStore::Update::Stale:
        break;
      case DocumentStore::Update::Unknown:
        out.push_back(log_message(2, "ignoring change to unopened document " + uri));
        break;
    }
  } else if (method == "textDocument/didClose") {
    std::string uri = uri_of(params);
    if (store_.close(uri)) {
      out.push_back({{"jsonrpc", "2.0"},
                     {"method", "textDocument/publishDiagnostics"},
                     {"params", {{"uri", uri}, {"diagnostics", json::array()}}}});
    }
  } else if (method == "workspace/didChangeWatchedFiles") {
    {
      std::lock_guard lock(config_mutex_);
      config_cache_.clear();
    }
    for (const std::string& uri : store_.uris()) publish(uri, out);
  }
}

RuleConfig Server::config_for(const std::string& uri, std::vector<json>& out) {
  namespace fs = std::filesystem;
  std::optional<fs::path> path = options_.config_path;
  if (!path) {
    if (std::optional<fs::path> file = path_from_uri(uri)) path = find_config_file(*file);
  }
  if (!path) return default_config();

  std::error_code ec;
  fs::file_time_type mtime = fs::last_write_time(*path, ec);
  std::lock_guard lock(config_mutex_);
  if (auto it = config_cache_.find(*path); !ec && it != config_cache_.end() && it->second.mtime == mtime) {
    return it->second.config;
  }
  std::ifstream in(*path, std::ios::binary);
  if (!in) {
    out.push_back(log_message(2, "cannot read config " + path->string() + "; using defaults"));
    return default_config();
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  ConfigResult loaded = load_config(text);
  if (loaded.error) {
    out.push_back(log_message(1, path->string() + ": " + loaded.error->message + "; using defaults"));
  }
  config_cache_[*path] = CachedConfig{mtime, loaded.config};
  return loaded.config;
}

void Server::publish(const std::string& uri, std::vector<json>& out) {
  std::optional<StoredDocument> doc = store_.get(uri);
  if (!doc) return;
  RuleConfig config = config_for(uri, out);
  Analysis analysis = analyze(doc->text, config);
  LineIndex index(doc->text);

  json items = json::array();
  for (const Diagnostic& d : analysis.diagnostics) {
    json item = {
        {"range", {{"start", position(index, d.span.begin)}, {"end", position(index, d.span.end)}}},
        {"severity", d.severity == Severity::Error ? 1 : 2},
        {"code", d.rule_id},
        {"source", "boop"},
        {"message", d.message},
    };
    if (d.note) item["data"] = {{"note", *d.note}};
    items.push_back(std::move(item));
  }
  out.push_back({{"jsonrpc", "2.0"},
                 {"method", "textDocument/publishDiagnostics"},
                 {"params", {{"uri", uri}, {"version", doc->version}, {"diagnostics", std::move(items)}}}});
}

int Server::run(std::istream& in, std::ostream& out) {
  while (!exited_) {
    std::optional<std::string> body = read_message(in);
    if (!body) break;
    json message = json::parse(*body, nullptr, /*allow_exceptions=*/false);
    std::vector<json> replies;
    if (message.is_discarded()) {
      replies.push_back(error_response(nullptr, kParseError, "invalid JSON"));
    } else {
      replies = handle(message);
    }
    for (const json& reply : replies) write_message(out, reply.dump());
  }
  return exit_code();
}

}  // namespace boop::lsp
