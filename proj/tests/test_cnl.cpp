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

#include <algorithm>

#include "edcnl/cnl.hpp"
#include "edcnl/error.hpp"
#include "shared_report.hpp"
#include "support.hpp"

using namespace edcnl;
using namespace edcnl::cnl;
using edtl::Attribute;
using edtl::AttributeCombination;
using edtl::Requirement;

namespace
{
  Requirement all_var()
  {
    Requirement r;
    r.set(Attribute::Trigger, PropExpr::var("T"));
    r.set(Attribute::Invariant, PropExpr::var("I"));
    r.set(Attribute::Final, PropExpr::var("F"));
    r.set(Attribute::Delay, PropExpr::var("D"));
    r.set(Attribute::Reaction, PropExpr::var("Rc"));
    r.set(Attribute::Release, PropExpr::var("Rl"));
    return r;
  }

  Requirement hand_dryer()
  {
    Requirement r;
    r.set(Attribute::Trigger, parse_prop("H and D"));
    r.set(Attribute::Reaction, parse_prop("D"));
    r.set(Attribute::Release, PropExpr::constant(false));
    return r;
  }

  bool has_message(const std::vector<Diagnostic>& ds, std::string_view fragment)
  {
    for (const auto& d : ds)
      if (d.message.find(fragment) != std::string::npos)
        return true;
    return false;
  }

  const std::vector<std::string> slot_vars = {"p", "q", "speed", "door_open"};
}

TEST_SUITE("cnl")
{
  TEST_CASE("grammar export contains the documented productions")
  {
    auto g = grammar_export();
    CHECK(g.find("Req := After <trigger>, <body_trig>") != std::string::npos);
    CHECK(g.find("<invariant> is valid <body_inv>") != std::string::npos);
    CHECK(g.find("forever") != std::string::npos);
    CHECK(g.find("must occur") != std::string::npos);
  }

  TEST_CASE("reference phrases are grammatical")
  {
    for (const char* phrase : {"After 'trigger', 'reaction' occurs now.",
                               "After 'trigger', 'invariant' is valid until either 'release' or "
                               "'reaction', and 'reaction' occurs within 'delay' from now.",
                               "After 'trigger', 'invariant' is valid forever."})
      {
        CAPTURE(phrase);
        CHECK_NOTHROW(check_grammar(tokenize_phrase(phrase), phrase));
        CHECK_NOTHROW(parse_requirement(phrase, testsupport::seed(), testsupport::default_report()));
      }
  }

  TEST_CASE("tokenizer")
  {
    auto toks = tokenize_phrase("After \xE2\x80\x98x > 3\xE2\x80\x99, <reaction> occurs now.");
    REQUIRE(toks.size() == 7);
    CHECK(toks[1].kind == PhraseToken::Kind::Slot);
    CHECK(toks[1].text == "x > 3");
    CHECK(toks[2].kind == PhraseToken::Kind::Comma);
    CHECK(toks[3].marker == Attribute::Reaction);
    CHECK(toks[6].kind == PhraseToken::Kind::Period);
    CHECK_THROWS_AS(tokenize_phrase("After 'x, 'y' occurs now."), SyntaxError);
    CHECK_THROWS_AS(tokenize_phrase("After <colour>, 'y' occurs now."), SyntaxError);
  }

  TEST_CASE("render examples")
  {
    const auto& rep = testsupport::default_report();
    const auto& corpus = testsupport::seed();
    CHECK(render_requirement(all_var(), corpus, rep)
          == "After 'T', 'I' is valid until either 'Rl' or 'Rc', and 'Rc' must occur within 'D' "
             "from 'F'.");
    CHECK(render_requirement(hand_dryer(), corpus, rep) == "After 'H and D', 'D' occurs now.");
    auto r = all_var();
    r.set(Attribute::Final, PropExpr::constant(true));
    CHECK(render_requirement(r, corpus, rep)
          == "After 'T', 'I' is valid until either 'Rl' or 'Rc', and 'Rc' occurs within 'D' from "
             "now.");
  }

  TEST_CASE("non-renderable classes raise NoTemplate with the note")
  {
    const auto& rep = testsupport::default_report();
    auto r = edtl::requirement_for(AttributeCombination::from_key("vvvttf"));
    try
      {
        render_requirement(r, testsupport::seed(), rep);
        FAIL("expected NoTemplate");
      }
    catch (const NoTemplate& e)
      {
        CHECK(e.class_id() == classify::canonical_class(AttributeCombination::from_key("vvvttf"), rep).id);
        CHECK(std::string(e.what()).find("broader semantics") != std::string::npos);
      }
    CHECK_THROWS_AS(render_requirement(r, CnlCorpus{}, rep), NoTemplate);
  }

  TEST_CASE("parse examples")
  {
    const auto& rep = testsupport::default_report();
    const auto& corpus = testsupport::seed();
    auto p = parse_requirement("After 'H and D', 'D' occurs now.", corpus, rep);
    CHECK(p.requirement == hand_dryer());
    CHECK(p.warnings.empty());

    auto f = parse_requirement("After 'T', 'I' is valid forever.", corpus, rep);
    CHECK(edtl::combination_of(f.requirement).key() == "vvvttf");
    CHECK(f.requirement[Attribute::Trigger] == PropExpr::var("T"));
    CHECK(f.requirement[Attribute::Invariant] == PropExpr::var("I"));
    bool broader = false;
    for (const auto& w : f.warnings)
      broader = broader || w.find("broader semantics") != std::string::npos;
    CHECK(broader);
  }

  TEST_CASE("parse is whitespace tolerant")
  {
    auto p = parse_requirement("  After   'H and D' ,  'D'  occurs now .", testsupport::seed(),
                               testsupport::default_report());
    CHECK(p.requirement == hand_dryer());
  }

  TEST_CASE("parse errors")
  {
    const auto& rep = testsupport::default_report();
    const auto& corpus = testsupport::seed();
    try
      {
        parse_requirement("After 'T' 'I' occurs now.", corpus, rep);
        FAIL("expected SyntaxError");
      }
    catch (const SyntaxError& e)
      {
        CHECK(e.position() >= 9);
        CHECK(e.position() <= 11);
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
      }
    CHECK_THROWS_AS(parse_requirement("After 'T', 'x +' occurs now.", corpus, rep), SyntaxError);
    // Grammatical, but no seed template has this skeleton.
    CHECK_THROWS_AS(parse_requirement("'I' is valid forever.", corpus, rep), Error);
  }

  TEST_CASE("ambiguous phrases report every candidate")
  {
    const auto& rep = testsupport::default_report();
    CnlCorpus corpus = testsupport::seed();
    CnlTemplate dup = *corpus.renderable_for(
      classify::canonical_class(AttributeCombination::from_key("vtttvf"), rep).id);
    dup.class_id = 99;
    dup.renderable = false;
    dup.note = "duplicate";
    corpus.templates.push_back(dup);
    try
      {
        parse_requirement("After 'a', 'b' occurs now.", corpus, rep);
        FAIL("expected AmbiguousPhrase");
      }
    catch (const AmbiguousPhrase& e)
      {
        CHECK(e.candidates().size() == 2);
        CHECK(std::find(e.candidates().begin(), e.candidates().end(), 99) != e.candidates().end());
      }
  }

  TEST_CASE("validate_template examples")
  {
    const auto& rep = testsupport::default_report();
    auto cls = classify::canonical_class(AttributeCombination::from_key("vtttvf"), rep).id;
    CnlTemplate good{cls, "After <trigger>, <reaction> occurs now.", Provenance::Paper, true, {}, ""};
    CHECK(validate_template(good, rep).empty());

    auto bad = good;
    bad.text = "After <trigger>, <invariant> is valid until <release>.";
    CHECK(has_message(validate_template(bad, rep), "slot for constant attribute"));

    auto missing = good;
    missing.text = "After 'x', <reaction> occurs now.";
    CHECK(has_message(validate_template(missing, rep), "missing slot <trigger>"));

    auto garbled = good;
    garbled.text = "After <trigger> <reaction> occurs now.";
    auto ds = validate_template(garbled, rep);
    REQUIRE_FALSE(ds.empty());
    CHECK(ds.front().position.has_value());

    auto nowhere = good;
    nowhere.class_id = 1000;
    CHECK_FALSE(validate_template(nowhere, rep).empty());
  }

  TEST_CASE("seed corpus is valid")
  {
    const auto& rep = testsupport::default_report();
    CHECK(validate_corpus(testsupport::seed(), rep).empty());
    for (const auto& t : testsupport::seed().templates)
      {
        CHECK(t.provenance == Provenance::Paper);
        if (!t.renderable)
          CHECK_FALSE(t.note.empty());
      }
    auto twice = testsupport::seed();
    twice.templates.push_back(twice.templates.front());
    CHECK_FALSE(validate_corpus(twice, rep).empty());
  }

  TEST_CASE("fill_template quotes slot text")
  {
    CHECK(fill_template("After <trigger>, <invariant> is valid forever.",
                        {{Attribute::Trigger, "T"}, {Attribute::Invariant, "I"}})
          == "After 'T', 'I' is valid forever.");
  }

  TEST_CASE("property: parse inverts render on every renderable class")
  {
    const auto& rep = testsupport::default_report();
    const auto& corpus = testsupport::seed();
    testsupport::Rng rng(51);
    for (const auto& t : corpus.templates)
      {
        if (!t.renderable)
          continue;
        auto c = authoring_combination(t, rep);
        for (int k = 0; k < 50; ++k)
          {
            Requirement r = edtl::requirement_for(c);
            for (auto a : edtl::all_attributes)
              if (c[a] == edtl::Tristate::Var)
                r.set(a, testsupport::random_prop(rng, slot_vars, 2));
            auto text = render_requirement(r, corpus, rep);
            CAPTURE(text);
            auto back = parse_requirement(text, corpus, rep);
            CHECK(back.class_id == t.class_id);
            CHECK(edtl::combination_of(back.requirement) == c);
            CHECK(back.requirement == r);
          }
      }
  }

  TEST_CASE("property: any member of a renderable class round-trips to its class")
  {
    const auto& rep = testsupport::default_report();
    const auto& corpus = testsupport::seed();
    for (const auto& cls : rep.classes)
      {
        if (!corpus.renderable_for(cls.id))
          continue;
        for (const auto& m : cls.members)
          {
            auto r = edtl::requirement_for(m.combination);
            auto text = render_requirement(r, corpus, rep);
            CAPTURE(text);
            auto back = parse_requirement(text, corpus, rep);
            CHECK(classify::canonical_class(edtl::combination_of(back.requirement), rep).id
                  == cls.id);
            // Constant attributes of the member never show up as slots.
            for (auto a : edtl::all_attributes)
              if (m.combination[a] != edtl::Tristate::Var)
                CHECK(text.find("'" + std::string(edtl::abbreviation_of(a)) + "'")
                      == std::string::npos);
          }
      }
  }
}
