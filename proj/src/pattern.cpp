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

#include "edcnl/pattern.hpp"

#include "edcnl/error.hpp"

namespace edcnl::edtl
{
  namespace
  {
    constexpr std::array<std::string_view, 6> names = {
      "trigger", "invariant", "final", "delay", "reaction", "release",
    };
    constexpr std::array<std::string_view, 6> abbreviations = {
      "trig", "inv", "fin", "del", "rea", "rel",
    };
  }

  std::string_view name_of(Attribute a) { return names[index_of(a)]; }
  std::string_view abbreviation_of(Attribute a) { return abbreviations[index_of(a)]; }

  std::optional<Attribute> attribute_named(std::string_view name)
  {
    for (auto a : all_attributes)
      if (name_of(a) == name)
        return a;
    return std::nullopt;
  }

  std::optional<Attribute> attribute_abbreviated(std::string_view abbr)
  {
    for (auto a : all_attributes)
      if (abbreviation_of(a) == abbr)
        return a;
    return std::nullopt;
  }

  char letter_of(Tristate t)
  {
    switch (t)
      {
      case Tristate::Var: return 'v';
      case Tristate::True: return 't';
      case Tristate::False: return 'f';
      }
    return '?';
  }

  std::string AttributeCombination::key() const
  {
    std::string s;
    for (auto t : values)
      s += letter_of(t);
    return s;
  }

  AttributeCombination AttributeCombination::from_key(std::string_view key)
  {
    if (key.size() != 6)
      throw Error("combination key must have six letters: '" + std::string(key) + "'");
    AttributeCombination c;
    for (std::size_t i = 0; i < 6; ++i)
      switch (key[i])
        {
        case 'v': c.values[i] = Tristate::Var; break;
        case 't': c.values[i] = Tristate::True; break;
        case 'f': c.values[i] = Tristate::False; break;
        default:
          throw Error("combination key letters must be v, t or f: '" + std::string(key) + "'");
        }
    return c;
  }

  Requirement::Requirement()
  {
    values_.fill(PropExpr::constant(true));
  }

  void Requirement::set(Attribute a, const PropExpr& value)
  {
    values_[index_of(a)] = fold_constants(value);
  }

  ltl::Formula base_semantics()
  {
    using namespace ltl;
    auto trig = atom("trig"), inv = atom("inv"), fin = atom("fin");
    auto del = atom("del"), rea = atom("rea"), rel = atom("rel");
    auto waiting = weak_until(land(inv, lnot(del)), lor(rel, land(inv, rea)));
    auto body = weak_until(land(inv, lnot(fin)), lor(rel, land(fin, waiting)));
    return globally(implies(trig, body));
  }

  ltl::Formula instantiate(const Requirement& r, bool do_simplify)
  {
    ltl::Binding binding;
    for (auto a : all_attributes)
      binding.emplace(std::string(abbreviation_of(a)), r[a]);
    auto f = ltl::substitute(base_semantics(), binding);
    return do_simplify ? ltl::simplify(f) : f;
  }

  AttributeCombination combination_of(const Requirement& r)
  {
    AttributeCombination c;
    for (auto a : all_attributes)
      {
        const PropExpr& e = r[a];
        c[a] = !e.is_const() ? Tristate::Var
          : e.value()        ? Tristate::True
                             : Tristate::False;
      }
    return c;
  }

  Requirement requirement_for(const AttributeCombination& c)
  {
    Requirement r;
    for (auto a : all_attributes)
      switch (c[a])
        {
        case Tristate::Var:
          r.set(a, PropExpr::var(std::string(abbreviation_of(a))));
          break;
        case Tristate::True:
          r.set(a, PropExpr::constant(true));
          break;
        case Tristate::False:
          r.set(a, PropExpr::constant(false));
          break;
        }
    return r;
  }

  std::vector<AttributeCombination> enumerate_combinations()
  {
    std::vector<AttributeCombination> out;
    out.reserve(729);
    for (int n = 0; n < 729; ++n)
      {
        AttributeCombination c;
        int x = n;
        for (int i = 5; i >= 0; --i)
          {
            c.values[static_cast<std::size_t>(i)] = static_cast<Tristate>(x % 3);
            x /= 3;
          }
        out.push_back(c);
      }
    return out;
  }

  std::size_t enumeration_index(const AttributeCombination& c)
  {
    std::size_t n = 0;
    for (auto t : c.values)
      n = n * 3 + static_cast<std::size_t>(t);
    return n;
  }
}
