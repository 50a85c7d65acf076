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

#include <CLI11.hpp>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "boop/check.hpp"
#include "boop/config.hpp"
#include "boop/lsp/server.hpp"
#include "boop/report.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kUsageError = 2;

struct ConfigFailure {
  std::string message;
};

std::optional<fs::path> explicit_config(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv("BOOP_CONFIG"); env != nullptr && *env != '\0') return fs::path(env);
  return std::nullopt;
}

boop::RuleConfig read_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || !fs::is_regular_file(path)) throw ConfigFailure{fmt::format("cannot read config `{}`", path.string())};
  std::ostringstream text;
  text << in.rdbuf();
  boop::ConfigResult loaded = boop::load_config(text.str());
  if (loaded.error) {
    throw ConfigFailure{fmt::format("error[G001] {}: {}", path.string(), loaded.error->message)};
  }
  return loaded.config;
}

// Loads each distinct discovered config once per run.
class ConfigResolver {
 public:
  explicit ConfigResolver(std::optional<fs::path> fixed) : fixed_(std::move(fixed)) {
    if (fixed_) fixed_config_ = read_config(*fixed_);
  }

  const boop::RuleConfig& for_file(const fs::path& file) {
    if (fixed_) return *fixed_config_;
    std::optional<fs::path> found = boop::find_config_file(file);
    if (!found) return defaults_;
    auto it = cache_.find(*found);
    if (it == cache_.end()) it = cache_.emplace(*found, read_config(*found)).first;
    return it->second;
  }

 private:
  std::optional<fs::path> fixed_;
  std::optional<boop::RuleConfig> fixed_config_;
  boop::RuleConfig defaults_ = boop::default_config();
  std::map<fs::path, boop::RuleConfig> cache_;
};

int run_check(const std::vector<std::string>& files, const std::string& config_flag, const std::string& format,
              std::size_t max_warnings) {
  std::vector<boop::CheckResult> results;
  try {
    ConfigResolver configs(explicit_config(config_flag));
    for (const std::string& file : files) results.push_back(boop::check_file(file, configs.for_file(file)));
  } catch (const ConfigFailure& failure) {
    std::cerr << failure.message << "\n";
    return kUsageError;
  }

  int exit_code = 0;
  for (const boop::CheckResult& result : results) {
    bool unreadable = result.diagnostics.size() == 1 && result.diagnostics.front().rule_id == "F001";
    if (unreadable) {
      std::cerr << fmt::format("error[F001] {}: {}\n", result.file, result.diagnostics.front().message);
    } else if (format == "json") {
      std::cout << boop::render_json(result) << "\n";
    } else {
      std::cout << boop::render_human(result);
    }
    if (result.error_count > 0 || result.warn_count > max_warnings) exit_code = 1;
  }
  return exit_code;
}

int run_sections(const std::string& file, const std::string& format) {
  std::ifstream in(file, std::ios::binary);
  if (!in || !fs::is_regular_file(file)) {
    std::cerr << fmt::format("error[F001] {}: cannot read `{}`\n", file, file);
    return 1;
  }
  std::ostringstream text;
  text << in.rdbuf();
  boop::SplitResult split = boop::split_sections(text.str());
  std::cout << boop::render_sections(split.document, format == "json");
  return 0;
}

int run_lsp(const std::string& config_flag) {
  boop::lsp::ServerOptions options;
  options.config_path = explicit_config(config_flag);
  std::ios::sync_with_stdio(false);
  boop::lsp::Server server(std::move(options));
  return server.run(std::cin, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker for BOOP-format submissions (Blueprint, Operations, OCaml code, Proof)", "boop"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "boop 0.1.0");

  std::vector<std::string> files;
  std::string config_flag;
  std::string format = "human";
  std::size_t max_warnings = std::numeric_limits<std::size_t>::max();
  CLI::App* check = app.add_subcommand("check", "Check submissions and report diagnostics");
  check->add_option("files", files, "Submission files")->required();
  check->add_option("--config", config_flag, "Config file (default: $BOOP_CONFIG, then boop.config.json discovery)");
  check->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
  check->add_option("--max-warnings", max_warnings, "Fail when a file has more warnings than this");

  std::string sections_file;
  std::string sections_format = "text";
  CLI::App* sections = app.add_subcommand("sections", "Show which of the four sections are present");
  sections->add_option("file", sections_file, "Submission file")->required();
  sections->add_option("--format", sections_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  CLI::App* lsp = app.add_subcommand("lsp", "Run the language server on standard input/output");
  lsp->add_option("--config", config_flag, "Config file used for every document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (*check) return run_check(files, config_flag, format, max_warnings);
  if (*sections) return run_sections(sections_file, sections_format);
  if (*lsp) {
    try {
      return run_lsp(config_flag);
    } catch (const ConfigFailure& failure) {
      std::cerr << failure.message << "\n";
      return kUsageError;
    }
  }
  return kUsageError;
}
