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

#include "boop/config.hpp"
#include "test_support.hpp"

using namespace boop;
using boop::testing::TempDir;

namespace {

std::string g001_message(std::string_view text) {
  ConfigResult r = load_config(text);
  REQUIRE(r.error.has_value());
  CHECK(r.error->rule_id == "G001");
  CHECK(r.error->span == Span{0, 0});
  return r.error->message;
}

}  // namespace

TEST_SUITE_BEGIN("config");

TEST_CASE("empty object and empty text give the defaults") {
  for (std::string_view text : {"{}", "", "  \n"}) {
    ConfigResult r = load_config(text);
    CHECK_FALSE(r.error);
    CHECK(r.config.levels == default_config().levels);
    CHECK(r.config.banned_identifier_prefixes == default_config().banned_identifier_prefixes);
  }
}

TEST_CASE("defaults follow the rule catalog") {
  RuleConfig c = default_config();
  for (const RuleInfo& rule : rule_catalog()) CHECK(c.level(rule.id) == rule.default_level);
  CHECK(c.level("R001") == Severity::Error);
  CHECK(c.level("S001") == Severity::Warn);
  CHECK(c.required_sections.size() == 4);
  CHECK(c.proof_strategies.size() == 2);
  CHECK(c.is_allowed("failwith"));
  CHECK_FALSE(c.is_allowed("print_string"));
  CHECK_FALSE(c.strict_if);
}

TEST_CASE("levels overlay one rule at a time") {
  ConfigResult r = load_config(R"({"levels": {"R001": "off", "C001": "error"}})");
  REQUIRE_FALSE(r.error);
  CHECK(r.config.level("R001") == Severity::Off);
  CHECK_FALSE(r.config.enabled("R001"));
  CHECK(r.config.level("C001") == Severity::Error);
  CHECK(r.config.level("I001") == Severity::Error);
  CHECK(r.config.level("S002") == Severity::Warn);
}

TEST_CASE("arrays replace the default list") {
  ConfigResult r = load_config(R"({"banned_operators": ["/", "mod"], "allowed_identifiers": []})");
  REQUIRE_FALSE(r.error);
  CHECK(r.config.banned_operators == std::vector<std::string>{"/", "mod"});
  CHECK(r.config.allowed_identifiers.empty());
  CHECK(r.config.banned_identifier_prefixes == default_config().banned_identifier_prefixes);
}

TEST_CASE("proof markers are stored lowercase and sections are deduplicated") {
  ConfigResult r = load_config(R"({
    "proof_strategies": [{"name": "cases", "markers": ["Case Zero", "CASE SUCC"]}],
    "required_sections": ["code", "proof", "code"],
    "strict_if": true,
    "version": 1
  })");
  REQUIRE_FALSE(r.error);
  REQUIRE(r.config.proof_strategies.size() == 1);
  CHECK(r.config.proof_strategies[0].markers == std::vector<std::string>{"case zero", "case succ"});
  CHECK(r.config.required_sections == std::vector<SectionKind>{SectionKind::Code, SectionKind::Proof});
  CHECK(r.config.strict_if);
}

TEST_CASE("malformed configs are G001 and fall back to the defaults") {
  CHECK(g001_message(R"({"levels": {"Z999": "off"}})").find("Z999") != std::string::npos);
  CHECK(g001_message(R"({"levels": {"R001": "loud"}})").find("loud") != std::string::npos);
  CHECK(g001_message("{not json") == "config is not valid JSON");
  CHECK(g001_message(R"({"colour": 1})").find("colour") != std::string::npos);
  CHECK(g001_message(R"({"levels": {"X010": "off"}})").find("not configurable") != std::string::npos);
  CHECK(g001_message(R"({"strict_if": "yes"})").find("strict_if") != std::string::npos);
  CHECK(g001_message(R"({"banned_operators": "/"})").find("banned_operators") != std::string::npos);
  CHECK(g001_message(R"({"required_sections": ["appendix"]})").find("appendix") != std::string::npos);
  CHECK(g001_message(R"({"proof_strategies": [{"name": "x", "markers": []}]})").find("no markers") !=
        std::string::npos);
  CHECK(g001_message("[1, 2]").find("object") != std::string::npos);

  ConfigResult r = load_config(R"({"levels": {"R001": "off", "Q1": "warn"}})");
  CHECK(r.config.level("R001") == Severity::Error);
}

TEST_CASE("non-configurable rules may restate their default") {
  CHECK_FALSE(load_config(R"({"levels": {"X010": "error"}})").error);
}

TEST_CASE("discovery finds the nearest config in an ancestor directory") {
  TempDir dir;
  std::filesystem::create_directories(dir.path() / "course" / "hw1" / "sub");
  std::filesystem::path top = dir.write("course/boop.config.json", "{}");
  std::filesystem::path hw = dir.write("course/hw1/boop.config.json", "{}");
  std::filesystem::path file = dir.write("course/hw1/sub/answer.boop", "");

  auto found = find_config_file(file);
  REQUIRE(found);
  CHECK(std::filesystem::equivalent(*found, hw));

  std::filesystem::remove(hw);
  found = find_config_file(file);
  REQUIRE(found);
  CHECK(std::filesystem::equivalent(*found, top));

  std::filesystem::remove(top);
  found = find_config_file(file);
  if (found) CHECK_FALSE(found->string().starts_with(dir.path().string()));
}

TEST_CASE("fixture configs load") {
  CHECK(boop::testing::fixture_config("no_r001.json").level("R001") == Severity::Off);
  CHECK(boop::testing::fixture_config("banned_operators.json").banned_operators.size() == 2);
}

TEST_SUITE_END();
