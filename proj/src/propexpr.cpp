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

#include "edcnl/propexpr.hpp"

#include <array>
#include <cassert>
#include <vector>

#include "edcnl/error.hpp"
#include "lexer.hpp"

namespace edcnl
{
  struct PropExpr::Node
  {
    Kind kind;
    bool value = false;
    std::string name;
    CmpOp op = CmpOp::Eq;
    std::int64_t literal = 0;
    std::vector<PropExpr> kids;
  };

  std::string_view to_string(CmpOp op)
  {
    switch (op)
      {
      case CmpOp::Lt: return "<";
      case CmpOp::Le: return "<=";
      case CmpOp::Eq: return "=";
      case CmpOp::Ne: return "!=";
      case CmpOp::Ge: return ">=";
      case CmpOp::Gt: return ">";
      }
    return "?";
  }

  PropExpr::PropExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  PropExpr::PropExpr() : PropExpr(constant(false)) {}

  PropExpr PropExpr::constant(bool value)
  {
    static const auto nodes = [] {
      std::array<std::shared_ptr<const Node>, 2> out;
      for (bool v : {false, true})
        {
          auto n = std::make_shared<Node>();
          n->kind = Kind::Const;
          n->value = v;
          out[v] = std::move(n);
        }
      return out;
    }();
    return PropExpr(nodes[value]);
  }

  PropExpr PropExpr::var(std::string name)
  {
    assert(is_identifier(name));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->name = std::move(name);
    return PropExpr(std::move(n));
  }

  PropExpr PropExpr::compare(std::string name, CmpOp op, std::int64_t literal)
  {
    assert(is_identifier(name));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Compare;
    n->name = std::move(name);
    n->op = op;
    n->literal = literal;
    return PropExpr(std::move(n));
  }

  PropExpr PropExpr::negate(PropExpr operand)
  {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Not;
    n->kids.push_back(std::move(operand));
    return PropExpr(std::move(n));
  }

  PropExpr PropExpr::conj(PropExpr lhs, PropExpr rhs)
  {
    auto n = std::make_shared<Node>();
    n->kind = Kind::And;
    n->kids.push_back(std::move(lhs));
    n->kids.push_back(std::move(rhs));
    return PropExpr(std::move(n));
  }

  PropExpr PropExpr::disj(PropExpr lhs, PropExpr rhs)
  {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Or;
    n->kids.push_back(std::move(lhs));
    n->kids.push_back(std::move(rhs));
    return PropExpr(std::move(n));
  }

  PropExpr::Kind PropExpr::kind() const { return node_->kind; }
  bool PropExpr::value() const { return node_->value; }
  const std::string& PropExpr::name() const { return node_->name; }
  CmpOp PropExpr::op() const { return node_->op; }
  std::int64_t PropExpr::literal() const { return node_->literal; }
  const PropExpr& PropExpr::operand() const { return node_->kids.at(0); }
  const PropExpr& PropExpr::lhs() const { return node_->kids.at(0); }
  const PropExpr& PropExpr::rhs() const { return node_->kids.at(1); }

  bool operator==(const PropExpr& a, const PropExpr& b)
  {
    if (a.node_ == b.node_)
      return true;
    if (a.kind() != b.kind())
      return false;
    switch (a.kind())
      {
      case PropExpr::Kind::Const:
        return a.value() == b.value();
      case PropExpr::Kind::Var:
        return a.name() == b.name();
      case PropExpr::Kind::Compare:
        return a.name() == b.name() && a.op() == b.op()
          && a.literal() == b.literal();
      case PropExpr::Kind::Not:
        return a.operand() == b.operand();
      case PropExpr::Kind::And:
      case PropExpr::Kind::Or:
        return a.lhs() == b.lhs() && a.rhs() == b.rhs();
      }
    return false;
  }

  bool Valuation::bool_of(const std::string& name) const
  {
    auto it = bools_.find(name);
    if (it == bools_.end())
      throw UnboundIdentifier(name);
    return it->second;
  }

  std::int64_t Valuation::int_of(const std::string& name) const
  {
    auto it = ints_.find(name);
    if (it == ints_.end())
      throw UnboundIdentifier(name);
    return it->second;
  }

  bool is_prop_keyword(std::string_view word)
  {
    return word == "and" || word == "or" || word == "not" || word == "true"
      || word == "false";
  }

  bool is_identifier(std::string_view word)
  {
    if (word.empty() || !detail::ident_start(word[0]))
      return false;
    for (char c : word)
      if (!detail::ident_char(c))
        return false;
    return true;
  }

  namespace
  {
    using detail::Token;
    using detail::TokKind;

    class PropParser
    {
    public:
      explicit PropParser(std::string_view text) : toks_(detail::tokenize(text)) {}

      PropExpr parse()
      {
        PropExpr e = expr();
        if (peek().kind != TokKind::End)
          throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
        return e;
      }

    private:
      const Token& peek() const { return toks_[i_]; }

      bool accept_word(std::string_view w)
      {
        if (peek().kind == TokKind::Ident && peek().text == w)
          {
            ++i_;
            return true;
          }
        return false;
      }

      bool accept_sym(std::string_view s)
      {
        if (peek().kind == TokKind::Sym && peek().text == s)
          {
            ++i_;
            return true;
          }
        return false;
      }

      PropExpr expr()
      {
        PropExpr e = term();
        while (accept_word("or") || accept_sym("|"))
          e = PropExpr::disj(std::move(e), term());
        return e;
      }

      PropExpr term()
      {
        PropExpr e = factor();
        while (accept_word("and") || accept_sym("&"))
          e = PropExpr::conj(std::move(e), factor());
        return e;
      }

      PropExpr factor()
      {
        const Token& t = peek();
        if (accept_word("not") || accept_sym("!"))
          return PropExpr::negate(factor());
        if (accept_sym("("))
          {
            PropExpr e = expr();
            if (!accept_sym(")"))
              throw SyntaxError("expected ')'", peek().pos);
            return e;
          }
        if (accept_word("true"))
          return PropExpr::constant(true);
        if (accept_word("false"))
          return PropExpr::constant(false);
        if (t.kind == TokKind::Ident && !is_prop_keyword(t.text))
          {
            std::string name = t.text;
            ++i_;
            if (detail::is_cmp(peek()))
              {
                CmpOp op = detail::cmp_of(peek().text);
                ++i_;
                return PropExpr::compare(std::move(name), op, detail::read_int(toks_, i_));
              }
            return PropExpr::var(std::move(name));
          }
        if (t.kind == TokKind::End)
          throw SyntaxError("unexpected end of expression", t.pos);
        throw SyntaxError("unexpected '" + t.text + "'", t.pos);
      }

      std::vector<Token> toks_;
      std::size_t i_ = 0;
    };

    int precedence(const PropExpr& e)
    {
      switch (e.kind())
        {
        case PropExpr::Kind::Or: return 1;
        case PropExpr::Kind::And: return 2;
        case PropExpr::Kind::Not: return 3;
        default: return 4;
        }
    }

    void render_into(const PropExpr& e, std::string& out)
    {
      auto child = [&out](const PropExpr& c, bool parens) {
        if (parens)
          out += '(';
        render_into(c, out);
        if (parens)
          out += ')';
      };
      switch (e.kind())
        {
        case PropExpr::Kind::Const:
          out += e.value() ? "true" : "false";
          return;
        case PropExpr::Kind::Var:
          out += e.name();
          return;
        case PropExpr::Kind::Compare:
          out += e.name();
          out += ' ';
          out += to_string(e.op());
          out += ' ';
          out += std::to_string(e.literal());
          return;
        case PropExpr::Kind::Not:
          out += "not ";
          child(e.operand(), precedence(e.operand()) < 3);
          return;
        case PropExpr::Kind::And:
        case PropExpr::Kind::Or:
          {
            int p = precedence(e);
            child(e.lhs(), precedence(e.lhs()) < p);
            out += e.kind() == PropExpr::Kind::And ? " and " : " or ";
            child(e.rhs(), precedence(e.rhs()) <= p);
            return;
          }
        }
    }

    void collect(const PropExpr& e, std::set<std::string>& out)
    {
      switch (e.kind())
        {
        case PropExpr::Kind::Const:
          return;
        case PropExpr::Kind::Var:
        case PropExpr::Kind::Compare:
          out.insert(e.name());
          return;
        case PropExpr::Kind::Not:
          collect(e.operand(), out);
          return;
        case PropExpr::Kind::And:
        case PropExpr::Kind::Or:
          collect(e.lhs(), out);
          collect(e.rhs(), out);
          return;
        }
    }
  }

  PropExpr parse_prop(std::string_view text)
  {
    return PropParser(text).parse();
  }

  bool eval_prop(const PropExpr& e, const Valuation& v)
  {
    switch (e.kind())
      {
      case PropExpr::Kind::Const:
        return e.value();
      case PropExpr::Kind::Var:
        return v.bool_of(e.name());
      case PropExpr::Kind::Compare:
        {
          std::int64_t x = v.int_of(e.name());
          switch (e.op())
            {
            case CmpOp::Lt: return x < e.literal();
            case CmpOp::Le: return x <= e.literal();
            case CmpOp::Eq: return x == e.literal();
            case CmpOp::Ne: return x != e.literal();
            case CmpOp::Ge: return x >= e.literal();
            case CmpOp::Gt: return x > e.literal();
            }
          return false;
        }
      case PropExpr::Kind::Not:
        return !eval_prop(e.operand(), v);
      case PropExpr::Kind::And:
        {
          // Both sides are evaluated so unbound names are always reported.
          bool a = eval_prop(e.lhs(), v);
          bool b = eval_prop(e.rhs(), v);
          return a && b;
        }
      case PropExpr::Kind::Or:
        {
          bool a = eval_prop(e.lhs(), v);
          bool b = eval_prop(e.rhs(), v);
          return a || b;
        }
      }
    return false;
  }

  std::string render_prop(const PropExpr& e)
  {
    std::string out;
    render_into(e, out);
    return out;
  }

  PropExpr fold_constants(const PropExpr& e)
  {
    switch (e.kind())
      {
      case PropExpr::Kind::Const:
      case PropExpr::Kind::Var:
      case PropExpr::Kind::Compare:
        return e;
      case PropExpr::Kind::Not:
        {
          PropExpr a = fold_constants(e.operand());
          if (a.is_const())
            return PropExpr::constant(!a.value());
          if (a.kind() == PropExpr::Kind::Not)
            return a.operand();
          return PropExpr::negate(std::move(a));
        }
      case PropExpr::Kind::And:
      case PropExpr::Kind::Or:
        {
          bool is_and = e.kind() == PropExpr::Kind::And;
          PropExpr a = fold_constants(e.lhs());
          PropExpr b = fold_constants(e.rhs());
          // unit: true for and, false for or; the other constant absorbs
          for (const PropExpr* x : {&a, &b})
            if (x->is_const() && x->value() != is_and)
              return PropExpr::constant(!is_and);
          if (a.is_const())
            return b;
          if (b.is_const())
            return a;
          return is_and ? PropExpr::conj(std::move(a), std::move(b))
                        : PropExpr::disj(std::move(a), std::move(b));
        }
      }
    return e;
  }

  std::set<std::string> identifiers(const PropExpr& e)
  {
    std::set<std::string> out;
    collect(e, out);
    return out;
  }
}
