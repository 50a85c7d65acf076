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

#include "boop/check.hpp"
#include "test_support.hpp"

using namespace boop;
using boop::testing::count_rule;
using boop::testing::fixture_config;
using boop::testing::fixture_path;
using boop::testing::read_fixture;
using boop::testing::slice;

namespace {

void check_counts(const CheckResult& r) {
  std::size_t errors = 0;
  std::size_t warnings = 0;
  for (const Diagnostic& d : r.diagnostics) {
    CHECK(d.severity != Severity::Off);
    errors += d.severity == Severity::Error ? 1 : 0;
    warnings += d.severity == Severity::Warn ? 1 : 0;
  }
  CHECK(r.error_count == errors);
  CHECK(r.warn_count == warnings);
}

}  // namespace

TEST_SUITE_BEGIN("check");

TEST_CASE("golden submission is clean once R001 is off") {
  CheckResult r = check_file(fixture_path("golden.boop"), fixture_config("no_r001.json"));
  CHECK(r.error_count == 0);
  CHECK(r.diagnostics.empty());
  check_counts(r);
}

TEST_CASE("golden submission under defaults only lacks `rec`") {
  CheckResult r = check_file(fixture_path("golden.boop"), default_config());
  CHECK(r.error_count == 3);
  CHECK(count_rule(r.diagnostics, "R001") == 3);
  check_counts(r);
}

TEST_CASE("deleting the proof leaves exactly one error, P001") {
  std::string source = boop::testing::without_section(read_fixture("golden.boop"), "(*** PROOF ***)");
  CheckResult r = check_source("golden.boop", source, fixture_config("no_r001.json"));
  REQUIRE(r.error_count == 1);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].rule_id == "P001");
  CHECK(r.diagnostics[0].message.find("proof") != std::string::npos);
}

TEST_CASE("each missing section is its own P001") {
  CheckResult r = check_file(fixture_path("div1.boop"), default_config());
  CHECK(count_rule(r.diagnostics, "P001") == 3);
}

TEST_CASE("an unreadable path is F001") {
  CheckResult r = check_file(fixture_path("does_not_exist.boop"), default_config());
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].rule_id == "F001");
  CHECK(r.error_count == 1);
  CHECK(r.diagnostics[0].message.find("does_not_exist.boop") != std::string::npos);

  r = check_file(boop::testing::fixture_path(""), default_config());
  CHECK(count_rule(r.diagnostics, "F001") == 1);
}

TEST_CASE("syntax errors suppress code rules and linking but not completeness") {
  std::string source =
      "(*** BLUEPRINT ***)\nfunction: g\nensures: true\n(*** CODE ***)\nlet f x = ref (\n";
  Analysis a = analyze(source, default_config());
  CHECK_FALSE(a.program);
  CHECK_FALSE(a.links);
  CHECK(count_rule(a.diagnostics, "X010") == 1);
  CHECK(count_rule(a.diagnostics, "I001") == 0);
  CHECK(count_rule(a.diagnostics, "T001") == 0);
  CHECK(count_rule(a.diagnostics, "L001") == 0);
  CHECK(count_rule(a.diagnostics, "P001") == 2);

  a = analyze("(*** CODE ***)\nlet s = \"open\n", default_config());
  CHECK(count_rule(a.diagnostics, "X002") == 1);
  CHECK(count_rule(a.diagnostics, "X010") == 0);
}

TEST_CASE("diagnostic spans index the whole submission") {
  for (const char* name : {"imperative_div.boop", "golden.boop", "div1.boop", "library_call.boop"}) {
    INFO(name);
    std::string source = read_fixture(name);
    CheckResult r = check_source(name, source, default_config());
    check_counts(r);
    for (const Diagnostic& d : r.diagnostics) {
      if (d.rule_id == "U001" || d.rule_id == "B001") {
        std::string_view text = slice(source, d.span);
        CHECK(d.message.find("`" + std::string(text) + "`") != std::string::npos);
      }
      if (d.rule_id == "I002") CHECK(slice(source, d.span).starts_with("while"));
      if (d.rule_id == "R001" || d.rule_id == "L002") {
        CHECK(d.message.find("`" + std::string(slice(source, d.span)) + "`") != std::string::npos);
      }
    }
  }
}

TEST_CASE("diagnostics are sorted by position then rule id") {
  CheckResult r = check_file(fixture_path("imperative_div.boop"), default_config());
  for (std::size_t i = 1; i < r.diagnostics.size(); ++i) {
    const Diagnostic& a = r.diagnostics[i - 1];
    const Diagnostic& b = r.diagnostics[i];
    CHECK((a.span.begin < b.span.begin || (a.span.begin == b.span.begin && a.rule_id <= b.rule_id)));
  }
}

TEST_CASE("positions are one-based and count code points") {
  std::string source = "(*** CODE ***)\n(* é *) let x = y\n";
  CheckResult r = check_source("x.boop", source, boop::testing::config_from(R"({"required_sections": []})"));
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].rule_id == "U001");
  CHECK(r.diagnostics[0].start == Position{2, 17});
  CHECK(r.diagnostics[0].end == Position{2, 18});
}

TEST_CASE("operations without steps is P002 only when required") {
  std::string source = boop::testing::without_section(read_fixture("golden.boop"), "(*** OPERATIONS ***)");
  source.insert(source.find("(*** CODE ***)"), "(*** OPERATIONS ***)\nWe divide.\n");
  RuleConfig config = fixture_config("no_r001.json");
  CHECK(count_rule(check_source("g.boop", source, config).diagnostics, "P002") == 1);

  config.required_sections = {SectionKind::Blueprint, SectionKind::Code, SectionKind::Proof};
  CHECK(check_source("g.boop", source, config).diagnostics.empty());
}

TEST_CASE("analysis is deterministic") {
  std::string source = read_fixture("imperative_div.boop");
  CHECK(analyze(source, default_config()).diagnostics == analyze(source, default_config()).diagnostics);
}

TEST_SUITE_END();
