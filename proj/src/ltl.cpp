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

#include "edcnl/ltl.hpp"

#include <array>
#include <cassert>

#include "edcnl/error.hpp"

namespace edcnl::ltl
{
  struct Formula::Node
  {
    Op op;
    PropExpr leaf;
    std::vector<Formula> kids;
    std::size_t size;
  };

  namespace
  {
    std::size_t arity(Op op)
    {
      switch (op)
        {
        case Op::Atom:
        case Op::True:
        case Op::False:
          return 0;
        case Op::Not:
        case Op::G:
        case Op::F:
        case Op::X:
          return 1;
        default:
          return 2;
        }
    }
  }

  Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  Formula::Formula() : Formula(tt()) {}

  Formula Formula::make(Op op, std::vector<Formula> kids)
  {
    assert(op != Op::Atom);
    if (kids.size() != arity(op))
      throw Error("wrong number of operands for formula node");
    if (op == Op::True || op == Op::False)
      {
        static const auto consts = [] {
          std::array<std::shared_ptr<const Node>, 2> out;
          for (bool v : {false, true})
            out[v] = std::make_shared<const Node>(
              Node{v ? Op::True : Op::False, PropExpr(), {}, 1});
          return out;
        }();
        return Formula(consts[op == Op::True]);
      }
    std::size_t size = 1;
    for (const auto& k : kids)
      size += k.size();
    return Formula(std::make_shared<const Node>(Node{op, PropExpr(), std::move(kids), size}));
  }

  Formula Formula::make_atom(PropExpr leaf)
  {
    assert(leaf.kind() == PropExpr::Kind::Var || leaf.kind() == PropExpr::Kind::Compare);
    return Formula(std::make_shared<const Node>(Node{Op::Atom, std::move(leaf), {}, 1}));
  }

  Op Formula::op() const { return node_->op; }
  const PropExpr& Formula::prop() const { return node_->leaf; }
  const std::string& Formula::name() const { return node_->leaf.name(); }
  const std::vector<Formula>& Formula::kids() const { return node_->kids; }
  std::size_t Formula::size() const { return node_->size; }
  bool Formula::is_binary() const { return arity(op()) == 2; }

  bool operator==(const Formula& a, const Formula& b)
  {
    if (a.node_ == b.node_)
      return true;
    if (a.op() != b.op() || a.size() != b.size())
      return false;
    if (a.op() == Op::Atom)
      return a.prop() == b.prop();
    for (std::size_t i = 0; i < a.kids().size(); ++i)
      if (!(a.kids()[i] == b.kids()[i]))
        return false;
    return true;
  }

  Formula tt() { return Formula::make(Op::True, {}); }
  Formula ff() { return Formula::make(Op::False, {}); }

  Formula atom(const PropExpr& e)
  {
    switch (e.kind())
      {
      case PropExpr::Kind::Const:
        return e.value() ? tt() : ff();
      case PropExpr::Kind::Var:
      case PropExpr::Kind::Compare:
        return Formula::make_atom(e);
      case PropExpr::Kind::Not:
        return lnot(atom(e.operand()));
      case PropExpr::Kind::And:
        return land(atom(e.lhs()), atom(e.rhs()));
      case PropExpr::Kind::Or:
        return lor(atom(e.lhs()), atom(e.rhs()));
      }
    return tt();
  }

  Formula atom(std::string name) { return Formula::make_atom(PropExpr::var(std::move(name))); }
  Formula lnot(Formula f) { return Formula::make(Op::Not, {std::move(f)}); }
  Formula land(Formula a, Formula b) { return Formula::make(Op::And, {std::move(a), std::move(b)}); }
  Formula lor(Formula a, Formula b) { return Formula::make(Op::Or, {std::move(a), std::move(b)}); }
  Formula implies(Formula a, Formula b) { return Formula::make(Op::Implies, {std::move(a), std::move(b)}); }
  Formula globally(Formula f) { return Formula::make(Op::G, {std::move(f)}); }
  Formula eventually(Formula f) { return Formula::make(Op::F, {std::move(f)}); }
  Formula next(Formula f) { return Formula::make(Op::X, {std::move(f)}); }
  Formula until(Formula a, Formula b) { return Formula::make(Op::U, {std::move(a), std::move(b)}); }
  Formula weak_until(Formula a, Formula b) { return Formula::make(Op::W, {std::move(a), std::move(b)}); }

  bool is_ltl_keyword(std::string_view w)
  {
    return w == "G" || w == "F" || w == "X" || w == "U" || w == "W"
      || is_prop_keyword(w);
  }

  namespace
  {
    void render_into(const Formula& f, std::string& out)
    {
      auto operand = [&out](const Formula& k) {
        if (k.is_binary())
          {
            out += '(';
            render_into(k, out);
            out += ')';
          }
        else
          render_into(k, out);
      };
      switch (f.op())
        {
        case Op::Atom:
          {
            const PropExpr& p = f.prop();
            if (is_ltl_keyword(p.name()))
              out += '"' + p.name() + '"';
            else
              out += p.name();
            if (p.kind() == PropExpr::Kind::Compare)
              {
                out += ' ';
                out += to_string(p.op());
                out += ' ';
                out += std::to_string(p.literal());
              }
            return;
          }
        case Op::True: out += "true"; return;
        case Op::False: out += "false"; return;
        case Op::Not:
          out += '!';
          operand(f.operand());
          return;
        case Op::G:
        case Op::F:
        case Op::X:
          out += f.op() == Op::G ? "G " : f.op() == Op::F ? "F " : "X ";
          operand(f.operand());
          return;
        default:
          break;
        }
      const char* sym = "";
      switch (f.op())
        {
        case Op::And: sym = " & "; break;
        case Op::Or: sym = " | "; break;
        case Op::Implies: sym = " -> "; break;
        case Op::U: sym = " U "; break;
        case Op::W: sym = " W "; break;
        default: break;
        }
      operand(f.lhs());
      out += sym;
      operand(f.rhs());
    }

    Formula map_atoms(const Formula& f, auto&& on_atom)
    {
      if (f.op() == Op::Atom)
        return on_atom(f);
      if (f.kids().empty())
        return f;
      std::vector<Formula> kids;
      kids.reserve(f.kids().size());
      bool changed = false;
      for (const auto& k : f.kids())
        {
          kids.push_back(map_atoms(k, on_atom));
          changed = changed || !(kids.back() == k);
        }
      return changed ? Formula::make(f.op(), std::move(kids)) : f;
    }

    void preorder_atoms(const Formula& f, auto&& visit)
    {
      if (f.op() == Op::Atom)
        {
          visit(f);
          return;
        }
      for (const auto& k : f.kids())
        preorder_atoms(k, visit);
    }
  }

  std::string render_ltl(const Formula& f)
  {
    std::string out;
    render_into(f, out);
    return out;
  }

  Formula substitute(const Formula& f, const Binding& binding)
  {
    return map_atoms(f, [&](const Formula& a) {
      if (a.prop().kind() == PropExpr::Kind::Var)
        if (auto it = binding.find(a.name()); it != binding.end())
          return atom(it->second);
      return a;
    });
  }

  Formula rename(const Formula& f, const std::map<std::string, std::string>& mapping)
  {
    return map_atoms(f, [&](const Formula& a) {
      if (a.prop().kind() == PropExpr::Kind::Var)
        if (auto it = mapping.find(a.name()); it != mapping.end())
          return atom(it->second);
      return a;
    });
  }

  std::set<std::string> atom_names(const Formula& f)
  {
    std::set<std::string> out;
    preorder_atoms(f, [&](const Formula& a) {
      if (a.prop().kind() == PropExpr::Kind::Var)
        out.insert(a.name());
    });
    return out;
  }

  std::vector<Formula> atom_leaves(const Formula& f)
  {
    std::vector<Formula> out;
    std::set<std::string> seen;
    preorder_atoms(f, [&](const Formula& a) {
      if (seen.insert(render_ltl(a)).second)
        out.push_back(a);
    });
    return out;
  }

  std::pair<Formula, std::map<std::string, std::string>>
  canonical_rename(const Formula& f)
  {
    std::map<std::string, std::string> mapping;
    preorder_atoms(f, [&](const Formula& a) {
      if (a.prop().kind() != PropExpr::Kind::Var)
        throw Error("canonical_rename: comparison atom '" + render_ltl(a) + "'");
      if (!mapping.contains(a.name()))
        mapping.emplace(a.name(), "a" + std::to_string(mapping.size() + 1));
    });
    return {rename(f, mapping), std::move(mapping)};
  }
}
