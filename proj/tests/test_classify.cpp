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

#include <map>
#include <set>

#include "edcnl/classify.hpp"
#include "edcnl/error.hpp"
#include "shared_report.hpp"
#include "support.hpp"

using namespace edcnl;
using namespace edcnl::classify;
using edtl::AttributeCombination;

namespace
{
  AttributeCombination key(const char* k) { return AttributeCombination::from_key(k); }

  // Evaluates a member formula on a trace over the class's canonical atoms.
  bool member_holds(const Member& m, const ltl::LassoTrace& canonical_trace)
  {
    return testsupport::holds(ltl::rename(m.formula, m.atom_map), canonical_trace);
  }

  std::vector<std::string> atoms_of(const SemanticClass& c)
  {
    auto s = ltl::atom_names(c.canonical_formula);
    return {s.begin(), s.end()};
  }
}

TEST_SUITE("classify")
{
  TEST_CASE("the report partitions all 729 combinations")
  {
    const auto& r = testsupport::default_report();
    std::set<AttributeCombination> seen;
    for (const auto& c : r.classes)
      for (const auto& m : c.members)
        CHECK(seen.insert(m.combination).second);
    CHECK(seen.size() == 729);
    CHECK(r.combination_count() == 729);
  }

  TEST_CASE("class ids are dense and follow the representative order")
  {
    const auto& r = testsupport::default_report();
    for (std::size_t i = 0; i < r.classes.size(); ++i)
      {
        CHECK(r.classes[i].id == static_cast<int>(i + 1));
        if (i > 0)
          CHECK(edtl::enumeration_index(r.classes[i - 1].representative)
                < edtl::enumeration_index(r.classes[i].representative));
      }
    CHECK(r.classes.front().representative.key() == "vvvvvv");
  }

  TEST_CASE("vtttvf and vvtttf share a class and vtttvf is canonical")
  {
    const auto& r = testsupport::default_report();
    const auto& a = canonical_class(key("vtttvf"), r);
    const auto& b = canonical_class(key("vvtttf"), r);
    CHECK(a.id == b.id);
    CHECK(a.representative.key() == "vtttvf");
    CHECK(ltl::render_ltl(a.canonical_formula) == "G (a1 -> a2)");
    CHECK(representative_of(std::vector{key("vvtttf"), key("vtttvf")}) == key("vtttvf"));
  }

  TEST_CASE("representatives are tight members")
  {
    for (const auto& c : testsupport::default_report().classes)
      CHECK(is_tight(c.representative_member()));
  }

  TEST_CASE("the canonical formula is the representative's formula, renamed")
  {
    for (const auto& c : testsupport::default_report().classes)
      {
        const auto& m = c.representative_member();
        CHECK(ltl::rename(m.formula, m.atom_map) == c.canonical_formula);
      }
  }

  TEST_CASE("property: members agree with their class formula on random lassos")
  {
    testsupport::Rng rng(41);
    for (const auto& c : testsupport::default_report().classes)
      {
        auto atoms = atoms_of(c);
        for (int k = 0; k < 40; ++k)
          {
            auto t = testsupport::random_lasso(rng, atoms, 3, 3);
            bool expect = testsupport::holds(c.canonical_formula, t);
            for (const auto& m : c.members)
              {
                CAPTURE(m.combination.key());
                REQUIRE(member_holds(m, t) == expect);
              }
          }
      }
  }

  TEST_CASE("every within-class member has structural or bounded oracle evidence")
  {
    for (const auto& c : testsupport::default_report().classes)
      for (const auto& m : c.members)
        if (m.evidence.kind == Evidence::Kind::Oracle)
          {
            REQUIRE(m.evidence.bound.has_value());
            CHECK(m.evidence.bound->prefix_bound == 2);
            CHECK(m.evidence.bound->loop_bound == 2);
          }
  }

  TEST_CASE("every pair of equal-arity classes carries a verified witness")
  {
    const auto& r = testsupport::default_report();
    std::map<std::pair<int, int>, const Discrepancy*> distinct;
    for (const auto& d : r.discrepancies)
      if (d.kind == Discrepancy::Kind::Distinct)
        distinct[{d.classes.at(0), d.classes.at(1)}] = &d;

    // Roots are the structural members; their renamed formulas are what
    // the witness separates.
    auto root_formula = [](const SemanticClass& c) {
      for (const auto& m : c.members)
        if (m.evidence.kind == Evidence::Kind::Structural)
          return ltl::canonical_rename(m.formula).first;
      throw Error("class without structural member");
    };

    for (std::size_t i = 0; i < r.classes.size(); ++i)
      for (std::size_t j = i + 1; j < r.classes.size(); ++j)
        {
          const auto& a = r.classes[i];
          const auto& b = r.classes[j];
          if (a.atom_count() != b.atom_count())
            continue;
          auto it = distinct.find({a.id, b.id});
          CAPTURE(a.id);
          CAPTURE(b.id);
          REQUIRE(it != distinct.end());
          std::size_t fact = 1;
          for (std::size_t k = 2; k <= a.atom_count(); ++k)
            fact *= k;
          CHECK(it->second->bijections_tried == fact);
          REQUIRE(it->second->witness.has_value());
          CHECK(testsupport::holds(root_formula(a), *it->second->witness)
                != testsupport::holds(root_formula(b), *it->second->witness));
        }
  }

  TEST_CASE("class count against the expected 32 is reported")
  {
    const auto& r = testsupport::default_report();
    bool noted = false;
    for (const auto& n : r.notes)
      noted = noted || n.find("differs from the expected 32") != std::string::npos;
    CHECK(noted == (r.classes.size() != 32));
  }

  TEST_CASE("classification is deterministic across thread counts")
  {
    auto one = classify_all({}, 1);
    const auto& many = testsupport::default_report();
    REQUIRE(one.classes.size() == many.classes.size());
    for (std::size_t i = 0; i < one.classes.size(); ++i)
      {
        CHECK(one.classes[i].representative == many.classes[i].representative);
        CHECK(one.classes[i].members.size() == many.classes[i].members.size());
      }
    CHECK(one.discrepancies.size() == many.discrepancies.size());
  }

  TEST_CASE("a looser oracle still partitions 729")
  {
    ltl::EquivBounds b;
    b.prefix_max = 1;
    b.loop_max = 1;
    b.random_samples = 0;
    auto r = classify_all(b);
    CHECK(r.combination_count() == 729);
    CHECK(r.classes.size() <= testsupport::default_report().classes.size() + 100);
  }

  TEST_CASE("unknown combination lookups fail")
  {
    ClassificationReport empty;
    CHECK_THROWS_AS(canonical_class(key("vvvvvv"), empty), Error);
  }

  TEST_CASE("trigger notes agree with the classes")
  {
    const auto& r = testsupport::default_report();
    std::size_t var_trigger = 0;
    for (const auto& c : r.classes)
      var_trigger += c.representative[edtl::Attribute::Trigger] == edtl::Tristate::Var;
    bool found = false;
    for (const auto& n : r.notes)
      found = found || n == std::to_string(var_trigger) + " classes have a representative with variable trigger";
    CHECK(found);
  }
}
