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
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edcnl/propexpr.hpp"

namespace edcnl::ltl
{
  enum class Op { Atom, True, False, Not, And, Or, Implies, G, F, X, U, W };

  /// \brief Immutable LTL syntax tree.
  ///
  /// Atom leaves hold a Var or Compare PropExpr; compound propositional
  /// expressions are lifted into Not/And/Or nodes when an atom is built
  /// (see atom()), so the tree alone decides the rendering.
  class Formula
  {
  public:
    Formula();  // true

    Op op() const;
    /// Only for Atom.
    const PropExpr& prop() const;
    /// Atom name (Var name or Compare variable).
    const std::string& name() const;
    /// 1 child for Not/G/F/X, 2 for the binary operators.
    const std::vector<Formula>& kids() const;
    const Formula& operand() const { return kids()[0]; }
    const Formula& lhs() const { return kids()[0]; }
    const Formula& rhs() const { return kids()[1]; }

    bool is_binary() const;
    bool is_constant() const { return op() == Op::True || op() == Op::False; }
    std::size_t size() const;

    friend bool operator==(const Formula& a, const Formula& b);

    /// Generic node builder; checks arity.
    static Formula make(Op op, std::vector<Formula> kids);
    static Formula make_atom(PropExpr leaf);

  private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
  };

  Formula tt();
  Formula ff();
  /// Lifts Const/Not/And/Or into formula nodes; Var/Compare become leaves.
  Formula atom(const PropExpr& e);
  Formula atom(std::string name);
  Formula lnot(Formula f);
  Formula land(Formula a, Formula b);
  Formula lor(Formula a, Formula b);
  Formula implies(Formula a, Formula b);
  Formula globally(Formula f);
  Formula eventually(Formula f);
  Formula next(Formula f);
  Formula until(Formula a, Formula b);
  Formula weak_until(Formula a, Formula b);

  /// \brief Parses formula text.
  ///
  /// Accepts `G F X U W -> & | !`, their Unicode spellings, parentheses,
  /// `true`, `false`, identifiers (double-quoted when they collide with a
  /// keyword) and `ident cmp int` comparisons.  Binding from tightest:
  /// `!` and temporal prefixes, `&`, `|`, `U`/`W` (right associative),
  /// `->` (right associative).
  Formula parse_ltl(std::string_view text);

  /// \brief ASCII rendering.
  ///
  /// Every binary operand of an operator is parenthesized, so `&` inside
  /// `W` or `|` keeps its parentheses: `(inv & !fin) W (fin & inv)`.
  std::string render_ltl(const Formula& f);

  using Binding = std::map<std::string, PropExpr>;

  /// Replaces every atom whose name is bound; no simplification.
  Formula substitute(const Formula& f, const Binding& binding);

  /// Renames Var atoms through `mapping`; unmapped atoms are kept.
  Formula rename(const Formula& f, const std::map<std::string, std::string>& mapping);

  /// Applies the constant-folding and subsumption rewrite system to a
  /// fixpoint.  The result has no true/false subterm unless it is one.
  Formula simplify(const Formula& f);

  /// Names of Var atoms.
  std::set<std::string> atom_names(const Formula& f);

  /// Distinct atom leaves keyed by their rendered text (Compare atoms
  /// included), in order of first occurrence.
  std::vector<Formula> atom_leaves(const Formula& f);

  /// \brief Renames atoms to a1, a2, ... in pre-order first occurrence.
  ///
  /// Returns the renamed formula and the old-name -> new-name map.
  /// Throws Error on a Compare atom.
  std::pair<Formula, std::map<std::string, std::string>>
  canonical_rename(const Formula& f);

  /// Names that render_ltl must double-quote.
  bool is_ltl_keyword(std::string_view word);
}
