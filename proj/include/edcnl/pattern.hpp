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

// The six-attribute event-driven requirement pattern.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edcnl/ltl.hpp"
#include "edcnl/propexpr.hpp"

namespace edcnl::edtl
{
  enum class Attribute { Trigger, Invariant, Final, Delay, Reaction, Release };

  inline constexpr std::array<Attribute, 6> all_attributes = {
    Attribute::Trigger, Attribute::Invariant, Attribute::Final,
    Attribute::Delay, Attribute::Reaction, Attribute::Release,
  };

  inline constexpr std::size_t index_of(Attribute a) { return static_cast<std::size_t>(a); }

  /// `trigger`, `invariant`, ...
  std::string_view name_of(Attribute a);
  /// `trig`, `inv`, `fin`, `del`, `rea`, `rel`
  std::string_view abbreviation_of(Attribute a);
  std::optional<Attribute> attribute_named(std::string_view name);
  std::optional<Attribute> attribute_abbreviated(std::string_view abbr);

  /// Enumeration order is Var < True < False.
  enum class Tristate { Var, True, False };

  char letter_of(Tristate t);  // v, t, f

  /// One tristate per attribute, indexed by Attribute.
  struct AttributeCombination
  {
    std::array<Tristate, 6> values{};

    Tristate operator[](Attribute a) const { return values[index_of(a)]; }
    Tristate& operator[](Attribute a) { return values[index_of(a)]; }

    /// Six letters from {v,t,f} in attribute order, e.g. `vtttvf`.
    std::string key() const;
    static AttributeCombination from_key(std::string_view key);  // throws Error

    friend bool operator==(const AttributeCombination&, const AttributeCombination&) = default;
    friend auto operator<=>(const AttributeCombination&, const AttributeCombination&) = default;
  };

  /// \brief Concrete attribute values.
  ///
  /// A value that folds to a constant is stored as that constant, so the
  /// Tristate view of a requirement is a function of its expressions.
  class Requirement
  {
  public:
    /// All attributes `true`.
    Requirement();

    const PropExpr& operator[](Attribute a) const { return values_[index_of(a)]; }
    void set(Attribute a, const PropExpr& value);

    friend bool operator==(const Requirement&, const Requirement&) = default;

  private:
    std::array<PropExpr, 6> values_;
  };

  /// G(trig -> ((inv & !fin) W (rel | (fin & ((inv & !del) W (rel | (inv & rea)))))))
  ltl::Formula base_semantics();

  ltl::Formula instantiate(const Requirement& r, bool do_simplify);

  AttributeCombination combination_of(const Requirement& r);

  /// Var attributes become their abbreviation atoms (`trig`, `inv`, ...).
  Requirement requirement_for(const AttributeCombination& c);

  /// All 729 combinations, lexicographic in attribute order.
  std::vector<AttributeCombination> enumerate_combinations();

  /// Position of `c` in enumerate_combinations().
  std::size_t enumeration_index(const AttributeCombination& c);
}
