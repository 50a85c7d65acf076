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

#include <doctest.h>

#include <nlohmann/json.hpp>

#include "boop/report.hpp"
#include "test_support.hpp"

using namespace boop;
using boop::testing::fixture_config;
using boop::testing::read_fixture;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t nl; (nl = text.find('\n', start)) != std::string::npos; start = nl + 1) {
    out.push_back(text.substr(start, nl - start));
  }
  if (start < text.size()) out.push_back(text.substr(start));
  return out;
}

std::vector<std::string> keys(const nlohmann::ordered_json& object) {
  std::vector<std::string> out;
  for (const auto& [k, v] : object.items()) out.push_back(k);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("report");

TEST_CASE("no diagnostics renders only the summary") {
  CheckResult r = check_source("ok.boop", read_fixture("golden.boop"), fixture_config("no_r001.json"));
  CHECK(render_human(r) == "0 errors, 0 warnings\n");
  CHECK(render_json(r) == R"({"file":"ok.boop","summary":{"errors":0,"warnings":0},"diagnostics":[]})");
}

TEST_CASE("while loop caret runs from `while` through `done`") {
  std::string source = "(*** CODE ***)\nlet f (n : int) : unit =\n  while n > 0 do () done\n";
  RuleConfig config = boop::testing::config_from(R"({"required_sections": []})");
  CheckResult r = check_source("loop.boop", source, config);
  REQUIRE(r.diagnostics.size() == 1);
  std::vector<std::string> out = lines(render_human(r));
  REQUIRE(out.size() >= 4);
  CHECK(out[0] == "error[I002] loop.boop:3:3: `while` loop");
  CHECK(out[1] == " 3 |   while n > 0 do () done");
  CHECK(out[2] == "   |   ^^^^^^^^^^^^^^^^^^^^^^");
  CHECK(out[3] == "note: express the iteration as a recursive function");
  CHECK(out.back() == "1 errors, 0 warnings");
}

TEST_CASE("multi-line spans underline every covered line") {
  std::string source = read_fixture("imperative_div.boop");
  CheckResult r = check_source("c.boop", source, default_config());
  std::string human = render_human(r);
  std::size_t block = human.find("error[I002]");
  REQUIRE(block != std::string::npos);
  std::size_t next = human.find("\n\n", block);
  std::vector<std::string> out = lines(human.substr(block, next - block));
  // Header, then a source/caret pair per line from `while` to `done`, then the note.
  REQUIRE(out.size() >= 5);
  CHECK(out[1].find("while") != std::string::npos);
  CHECK(out[out.size() - 3].find("done") != std::string::npos);
  CHECK(out.back().starts_with("note: "));
  for (std::size_t i = 2; i < out.size() - 1; i += 2) CHECK(out[i].find('^') != std::string::npos);
}

TEST_CASE("same-line diagnostics render in rule id order") {
  std::string source = "(*** CODE ***)\nlet f (r : int ref) : int = !r\n";
  RuleConfig config = boop::testing::config_from(R"({"required_sections": [], "banned_operators": ["!"]})");
  CheckResult r = check_source("x.boop", source, config);
  REQUIRE(r.diagnostics.size() == 2);
  std::string human = render_human(r);
  REQUIRE(human.find("error[I001]") != std::string::npos);
  CHECK(human.find("error[B002]") < human.find("error[I001]"));
}

TEST_CASE("JSON has the fixed key order and re-slices the source") {
  std::string source = read_fixture("imperative_div.boop");
  CheckResult r = check_source("c.boop", source, default_config());
  nlohmann::ordered_json root = nlohmann::ordered_json::parse(render_json(r));
  CHECK(keys(root) == std::vector<std::string>{"file", "summary", "diagnostics"});
  CHECK(keys(root["summary"]) == std::vector<std::string>{"errors", "warnings"});
  REQUIRE(root["diagnostics"].size() == r.error_count + r.warn_count);
  CHECK(root["summary"]["errors"] == r.error_count);
  for (std::size_t i = 0; i < r.diagnostics.size(); ++i) {
    const auto& item = root["diagnostics"][i];
    const Diagnostic& d = r.diagnostics[i];
    CHECK(keys(item) == std::vector<std::string>{"rule_id", "severity", "message", "note", "span"});
    CHECK(keys(item["span"]) ==
          std::vector<std::string>{"start_byte", "end_byte", "start_line", "start_col", "end_line", "end_col"});
    auto begin = item["span"]["start_byte"].get<std::size_t>();
    auto end = item["span"]["end_byte"].get<std::size_t>();
    CHECK(source.substr(begin, end - begin) == boop::testing::slice(source, d.span));
    CHECK(item["severity"] == (d.severity == Severity::Error ? "error" : "warn"));
    CHECK(item["span"]["start_line"].get<std::size_t>() >= 1);
  }
}

TEST_CASE("one banned operator gives one JSON entry") {
  std::string source = "(*** CODE ***)\nlet half (n : int) : int = n / 2\n";
  RuleConfig config = boop::testing::config_from(R"({"required_sections": [], "banned_operators": ["/"]})");
  nlohmann::json root = nlohmann::json::parse(render_json(check_source("h.boop", source, config)));
  REQUIRE(root["diagnostics"].size() == 1);
  CHECK(root["diagnostics"][0]["rule_id"] == "B002");
  CHECK(root["diagnostics"][0]["span"]["start_col"] == 28);
  CHECK(root["diagnostics"][0]["span"]["end_col"] == 33);
}

TEST_CASE("JSON output is stable and escapes text") {
  std::string source = "(*** CODE ***)\nlet s = \"q\\\"\" let t = unknown_é\n";
  CheckResult r = check_source("a \"quoted\" path.boop", source, default_config());
  CHECK(render_json(r) == render_json(r));
  nlohmann::json root = nlohmann::json::parse(render_json(r));
  CHECK(root["file"] == "a \"quoted\" path.boop");
}

TEST_CASE("section status rendering") {
  BoopDocument doc = split_sections("(*** CODE ***)\nlet x = 1\n(*** PROOF ***)\n").document;
  CHECK(render_sections(doc, false) == "blueprint: missing\noperations: missing\ncode: present\nproof: empty\n");
  CHECK(render_sections(doc, true) ==
        R"({"blueprint":"missing","operations":"missing","code":"present","proof":"empty"})" "\n");
}

TEST_SUITE_END();
