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

#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "boop/check.hpp"
#include "boop/lsp/server.hpp"
#include "boop/ocaml/lexer.hpp"
#include "boop/ocaml/parser.hpp"
#include "boop/ocaml/printer.hpp"
#include "boop/report.hpp"

namespace {

std::string fixture(const char* name) {
  std::ifstream in(std::filesystem::path(BOOP_FIXTURE_DIR) / name, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string code_of(const std::string& source) {
  boop::SplitResult split = boop::split_sections(source);
  return split.document.find(boop::SectionKind::Code)->body;
}

void BM_CheckGolden(benchmark::State& state) {
  std::string source = fixture("golden.boop");
  boop::RuleConfig config = boop::default_config();
  for (auto _ : state) benchmark::DoNotOptimize(boop::check_source("golden.boop", source, config));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * source.size()));
}
BENCHMARK(BM_CheckGolden);

void BM_CheckImperative(benchmark::State& state) {
  std::string source = fixture("imperative_div.boop");
  boop::RuleConfig config = boop::default_config();
  for (auto _ : state) benchmark::DoNotOptimize(boop::check_source("c.boop", source, config));
}
BENCHMARK(BM_CheckImperative);

// Submissions grow by repeating the golden code section with renamed functions.
void BM_CheckScaled(benchmark::State& state) {
  std::string code = code_of(fixture("golden.boop"));
  std::string source = "(*** CODE ***)\n";
  for (std::int64_t i = 0; i < state.range(0); ++i) source += code + "\n";
  boop::RuleConfig config = boop::default_config();
  config.required_sections = {boop::SectionKind::Code};
  for (auto _ : state) benchmark::DoNotOptimize(boop::check_source("big.boop", source, config));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * source.size()));
}
BENCHMARK(BM_CheckScaled)->RangeMultiplier(4)->Range(1, 64);

void BM_LexParse(benchmark::State& state) {
  std::string code = code_of(fixture("golden.boop"));
  for (auto _ : state) {
    boop::ocaml::LexResult lexed = boop::ocaml::lex(code);
    benchmark::DoNotOptimize(boop::ocaml::parse_program(lexed.tokens));
  }
}
BENCHMARK(BM_LexParse);

void BM_PrettyPrint(benchmark::State& state) {
  boop::ocaml::LexResult lexed = boop::ocaml::lex(code_of(fixture("golden.boop")));
  boop::ocaml::Program program = boop::ocaml::parse_program(lexed.tokens).program;
  for (auto _ : state) benchmark::DoNotOptimize(boop::ocaml::pretty_print(program));
}
BENCHMARK(BM_PrettyPrint);

void BM_RenderJson(benchmark::State& state) {
  boop::CheckResult result = boop::check_source("c.boop", fixture("imperative_div.boop"), boop::default_config());
  for (auto _ : state) benchmark::DoNotOptimize(boop::render_json(result));
}
BENCHMARK(BM_RenderJson);

void BM_LspDidChange(benchmark::State& state) {
  using json = nlohmann::json;
  boop::lsp::Server server;
  server.handle({{"jsonrpc", "2.0"}, {"id", 1}, {"method", "initialize"}, {"params", json::object()}});
  std::string text = fixture("imperative_div.boop");
  server.handle({{"jsonrpc", "2.0"},
                 {"method", "textDocument/didOpen"},
                 {"params", {{"textDocument", {{"uri", "file:///b.boop"}, {"version", 1}, {"text", text}}}}}});
  int version = 1;
  for (auto _ : state) {
    json change = {{"jsonrpc", "2.0"},
                   {"method", "textDocument/didChange"},
                   {"params",
                    {{"textDocument", {{"uri", "file:///b.boop"}, {"version", ++version}}},
                     {"contentChanges", json::array({{{"text", text}}})}}}};
    benchmark::DoNotOptimize(server.handle(change));
  }
}
BENCHMARK(BM_LspDidChange);

}  // namespace

BENCHMARK_MAIN();
