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

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edcnl/lasso.hpp"
#include "edcnl/ltl.hpp"
#include "edcnl/pattern.hpp"

namespace edcnl::classify
{
  inline constexpr int expected_class_count = 32;

  /// How a member was shown to belong to its class.
  struct Evidence
  {
    enum class Kind { Structural, Oracle };
    Kind kind = Kind::Structural;
    /// For Oracle: the class-root formula the member's group was checked
    /// against, and the bound the check held up to.
    std::string against;
    std::map<std::string, std::string> bijection;
    std::optional<ltl::EquivalentUpToBound> bound;
  };

  struct Member
  {
    edtl::AttributeCombination combination;
    /// Simplified instantiation with abbreviation atoms.
    ltl::Formula formula;
    /// Abbreviation atom -> canonical atom of the class formula.
    std::map<std::string, std::string> atom_map;
    Evidence evidence;
  };

  struct SemanticClass
  {
    int id = 0;
    edtl::AttributeCombination representative;
    ltl::Formula canonical_formula;
    std::vector<Member> members;

    const Member& member(const edtl::AttributeCombination& c) const;
    const Member& representative_member() const { return member(representative); }
    std::size_t atom_count() const { return ltl::atom_names(canonical_formula).size(); }
  };

  /// Evidence about the partition: merge notes, distinguishing witnesses
  /// and oracle failures.
  struct Discrepancy
  {
    enum class Kind { Merge, Distinct, ResourceLimit };
    Kind kind;
    /// Class ids involved, ascending.
    std::vector<int> classes;
    std::string note;
    std::map<std::string, std::string> bijection;
    std::optional<ltl::LassoTrace> witness;
    std::size_t bijections_tried = 0;
  };

  struct ClassificationReport
  {
    ltl::EquivBounds bounds;
    std::vector<SemanticClass> classes;
    std::vector<Discrepancy> discrepancies;
    std::vector<std::string> notes;

    std::size_t combination_count() const;
  };

  /// \brief Partitions the 729 attribute combinations into classes.
  ///
  /// Each combination is instantiated with abbreviation atoms, simplified
  /// and canonically renamed; equal renamed formulas form a group.  Groups
  /// with equal atom counts are then merged when some atom bijection makes
  /// them oracle-equivalent.  Class ids follow the enumeration order of the
  /// representatives.  `threads` = 0 picks the hardware concurrency.
  ClassificationReport classify_all(const ltl::EquivBounds& bounds, unsigned threads = 0);

  /// Throws Error when `c` is in no class.
  const SemanticClass& canonical_class(const edtl::AttributeCombination& c,
                                       const ClassificationReport& report);

  /// Minimum under the scan order trigger, reaction, release, invariant,
  /// final, delay with Var < True < False.
  edtl::AttributeCombination representative_of(std::span<const edtl::AttributeCombination> members);

  /// Every Var attribute of the member occurs in its formula.
  bool is_tight(const Member& m);
}
