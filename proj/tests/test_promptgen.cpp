// Copyright 2026 The edcnl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "edcnl/error.hpp"
#include "edcnl/promptgen.hpp"
#include "shared_report.hpp"
#include "support.hpp"

using namespace edcnl;
using namespace edcnl::promptgen;
using edtl::AttributeCombination;

namespace
{
  const std::string expected_prompt =
    "Reformulate in English the following sentence \"After 'trigger', 'invariant' is valid "
    "until either 'release' or 'reaction', and 'reaction' must occur within 'delay' from "
    "'final'.\" if always release = false, delay = true, final = true, invariant = true.";

  const std::string expected_hints =
    "Remember that if invariant is true, then the statement does not depend on the invariant, "
    "final = true means that final is now, final = false means that final never happens, "
    "delay = false means that the delay is infinite, delay = true means that there is no "
    "delay, reaction = false means that we do not wait for the reaction, reaction = true means "
    "that the statement does not depend on the reaction.";

  AttributeCombination key(const char* k) { return AttributeCombination::from_key(k); }

  bool ends_with(const std::string& s, std::string_view suffix)
  {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
  }
}

TEST_SUITE("promptgen")
{
  TEST_CASE("basic prompt is byte-exact")
  {
    CHECK(prompt_basic(key("vtttvf"), false) == expected_prompt);
    CHECK(prompt_basic(key("vtttvf")) == expected_prompt + " Explain why the resulting sentence is correct.");
    CHECK_THROWS_AS(prompt_basic(key("vvvvvv")), AllVariable);
  }

  TEST_CASE("assignments follow the fixed order")
  {
    CHECK(ends_with(prompt_basic(key("ftftft"), false),
                    "if always trigger = false, release = true, delay = true, final = false, "
                    "reaction = false, invariant = true."));
  }

  TEST_CASE("property: every prompt names exactly its constant attributes")
  {
    for (const auto& c : edtl::enumerate_combinations())
      {
        bool any = false;
        for (auto a : edtl::all_attributes)
          any = any || c[a] != edtl::Tristate::Var;
        if (!any)
          continue;
        auto p = prompt_basic(c, false);
        REQUIRE(p.find(base_sentence) != std::string::npos);
        auto tail = p.substr(p.find("if always "));
        for (auto a : edtl::all_attributes)
          {
            std::string name(edtl::name_of(a));
            bool mentioned = tail.find(name + " = ") != std::string::npos;
            CHECK(mentioned == (c[a] != edtl::Tristate::Var));
          }
      }
  }

  TEST_CASE("semantics prompts carry the formulas of three partially evaluated combinations")
  {
    const auto& rep = testsupport::default_report();
    auto check = [&](const char* k, const std::string& f) {
      auto p = prompt_with_semantics(key(k), rep, false);
      CHECK(p == prompt_basic(key(k), false)
                   + " The resulting sentence must correspond to the following LTL formula \"" + f
                   + "\".");
    };
    check("vtttvf", "G (trig -> rea)");
    check("vvtvvv", "G (trig -> ((inv & !del) W (rel | (inv & rea))))");
    check("vvvttf", "G (trig -> ((inv & !fin) W (fin & inv)))");
  }

  TEST_CASE("hints are constant and cover four attributes")
  {
    CHECK(prompt_hints() == expected_hints);
    CHECK(&prompt_hints() == &prompt_hints());
    CHECK(prompt_hints().find("trigger") == std::string::npos);
    CHECK(prompt_hints().find("release") == std::string::npos);
  }

  TEST_CASE("bundle text joins enabled prompts")
  {
    const auto& rep = testsupport::default_report();
    auto b = make_bundle(key("vtttvf"), rep, true, false, true);
    CHECK_FALSE(b.with_semantics.has_value());
    CHECK(bundle_text(b) == b.basic + "\n\n" + expected_hints + "\n");
    auto s = make_bundle(key("vtttvf"), rep, false, true, false);
    CHECK(bundle_text(s) == *s.with_semantics + "\n");
  }

  TEST_CASE("ingest accepts a well-formed answer")
  {
    const auto& rep = testsupport::default_report();
    auto res = ingest_response(key("vtttvf"),
                               "After \xE2\x80\x98trigger\xE2\x80\x99, \xE2\x80\x98reaction\xE2\x80\x99 "
                               "occurs now. This is correct because the invariant is always true.",
                               cnl::CnlCorpus{}, rep);
    REQUIRE(std::holds_alternative<cnl::CnlTemplate>(res));
    const auto& t = std::get<cnl::CnlTemplate>(res);
    CHECK(t.text == "After <trigger>, <reaction> occurs now.");
    CHECK(t.provenance == cnl::Provenance::Assistant);
    CHECK(t.renderable);
    CHECK(t.class_id == classify::canonical_class(key("vtttvf"), rep).id);
  }

  TEST_CASE("ingest into a class that already renders keeps the new template aside")
  {
    const auto& rep = testsupport::default_report();
    auto res = ingest_response(key("vtttvf"), "After 'trigger', 'reaction' occurs now.",
                               testsupport::seed(), rep);
    REQUIRE(std::holds_alternative<cnl::CnlTemplate>(res));
    CHECK_FALSE(std::get<cnl::CnlTemplate>(res).renderable);
    CHECK_FALSE(std::get<cnl::CnlTemplate>(res).note.empty());
  }

  TEST_CASE("ingest rejects the paraphrasing answer")
  {
    const auto& rep = testsupport::default_report();
    auto res = ingest_response(key("vtttvf"),
                               "After 'trigger', the condition should be valid until 'rea', which "
                               "must occur within the specified time limit.",
                               cnl::CnlCorpus{}, rep);
    CHECK(std::holds_alternative<std::vector<cnl::Diagnostic>>(res));
  }

  TEST_CASE("ingest reports a missing trigger slot")
  {
    const auto& rep = testsupport::default_report();
    auto res = ingest_response(key("vtttvf"), "After 'x', 'reaction' occurs now.",
                               cnl::CnlCorpus{}, rep);
    REQUIRE(std::holds_alternative<std::vector<cnl::Diagnostic>>(res));
    bool found = false;
    for (const auto& d : std::get<std::vector<cnl::Diagnostic>>(res))
      found = found || d.message.find("missing slot <trigger>") != std::string::npos;
    CHECK(found);
  }
}
