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

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace edcnl
{
  enum class CmpOp { Lt, Le, Eq, Ne, Ge, Gt };

  std::string_view to_string(CmpOp op);

  /// \brief Propositional expression over system variables.
  ///
  /// Immutable tree with value semantics; copies share nodes.  Used for
  /// attribute values, CNL slot contents and trace atoms.
  class PropExpr
  {
  public:
    enum class Kind { Const, Var, Compare, Not, And, Or };

    /// Defaults to the constant `false`.
    PropExpr();

    static PropExpr constant(bool value);
    static PropExpr var(std::string name);
    static PropExpr compare(std::string name, CmpOp op, std::int64_t literal);
    static PropExpr negate(PropExpr operand);
    static PropExpr conj(PropExpr lhs, PropExpr rhs);
    static PropExpr disj(PropExpr lhs, PropExpr rhs);

    Kind kind() const;
    bool is_const() const { return kind() == Kind::Const; }

    /// Only for Const.
    bool value() const;
    /// Only for Var and Compare.
    const std::string& name() const;
    /// Only for Compare.
    CmpOp op() const;
    std::int64_t literal() const;
    /// Only for Not.
    const PropExpr& operand() const;
    /// Only for And / Or.
    const PropExpr& lhs() const;
    const PropExpr& rhs() const;

    friend bool operator==(const PropExpr& a, const PropExpr& b);

  private:
    struct Node;
    explicit PropExpr(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
  };

  /// \brief Values of system variables at one instant.
  ///
  /// Boolean and integer bindings live side by side; a lookup of a name
  /// that is not bound with the requested type throws UnboundIdentifier.
  class Valuation
  {
  public:
    Valuation() = default;
    Valuation(std::initializer_list<std::pair<const std::string, bool>> bools)
      : bools_(bools)
    {
    }

    void set_bool(const std::string& name, bool value) { bools_[name] = value; }
    void set_int(const std::string& name, std::int64_t value) { ints_[name] = value; }

    bool bool_of(const std::string& name) const;
    std::int64_t int_of(const std::string& name) const;

    const std::map<std::string, bool>& bools() const { return bools_; }
    const std::map<std::string, std::int64_t>& ints() const { return ints_; }

    friend bool operator==(const Valuation&, const Valuation&) = default;

  private:
    std::map<std::string, bool> bools_;
    std::map<std::string, std::int64_t> ints_;
  };

  /// Parses `expr := term ('or' term)*; term := factor ('and' factor)*;
  /// factor := 'not' factor | '(' expr ')' | 'true' | 'false'
  ///         | ident cmp int | ident`.  Symbols `& | ! ∧ ∨ ¬` are accepted
  /// for the connectives.  Throws SyntaxError.
  PropExpr parse_prop(std::string_view text);

  bool eval_prop(const PropExpr& e, const Valuation& v);

  /// Keyword rendering with the fewest parentheses that preserve the tree.
  std::string render_prop(const PropExpr& e);

  /// Unit and absorbing laws for constants, plus double negation.
  PropExpr fold_constants(const PropExpr& e);

  /// Names of every Var and Compare node.
  std::set<std::string> identifiers(const PropExpr& e);

  /// Words that cannot be used as identifiers in expression text.
  bool is_prop_keyword(std::string_view word);

  bool is_identifier(std::string_view word);
}
