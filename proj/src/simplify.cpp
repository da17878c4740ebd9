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

// Bottom-up rewriting.  Every rule shrinks the tree, so the fixpoint loop
// terminates.

#include <algorithm>

#include "edcnl/ltl.hpp"

namespace edcnl::ltl
{
  namespace
  {
    void flatten_into(const Formula& f, Op op, std::vector<Formula>& out)
    {
      if (f.op() == op)
        {
          flatten_into(f.lhs(), op, out);
          flatten_into(f.rhs(), op, out);
        }
      else
        out.push_back(f);
    }

    std::vector<Formula> flatten(const Formula& f, Op op)
    {
      std::vector<Formula> out;
      flatten_into(f, op, out);
      return out;
    }

    bool contains(const std::vector<Formula>& xs, const Formula& x)
    {
      return std::find(xs.begin(), xs.end(), x) != xs.end();
    }

    // Some conjunct of `a` is a disjunct of `b`, so a implies b.
    bool implies_syntactically(const Formula& a, const Formula& b)
    {
      auto disjuncts = flatten(b, Op::Or);
      for (const auto& c : flatten(a, Op::And))
        if (contains(disjuncts, c))
          return true;
      return false;
    }

    // a | b contains some x together with !x.
    bool tautology_syntactically(const Formula& a, const Formula& b)
    {
      auto items = flatten(a, Op::Or);
      flatten_into(b, Op::Or, items);
      for (const auto& x : items)
        if (x.op() == Op::Not && contains(items, x.operand()))
          return true;
      return false;
    }

    // Index of the first item that another item makes redundant, or npos.
    std::size_t find_redundant(const std::vector<Formula>& items, Op op)
    {
      Op dual = op == Op::And ? Op::Or : Op::And;
      for (std::size_t i = 0; i < items.size(); ++i)
        {
          // absorption: a & (a | b) -> a, a | (a & b) -> a
          if (items[i].op() == dual)
            {
              auto parts = flatten(items[i], dual);
              for (std::size_t j = 0; j < items.size(); ++j)
                if (j != i && contains(parts, items[j]))
                  return i;
            }
          // a | (f W c) -> f W c when a is a disjunct of c; same for U
          if (op == Op::Or)
            for (std::size_t j = 0; j < items.size(); ++j)
              if (j != i && (items[j].op() == Op::W || items[j].op() == Op::U)
                  && contains(flatten(items[j].rhs(), Op::Or), items[i]))
                return i;
        }
      return std::string::npos;
    }

    Formula rewrite_assoc(const Formula& f)
    {
      Op op = f.op();
      Op absorbing = op == Op::And ? Op::False : Op::True;
      Op unit = op == Op::And ? Op::True : Op::False;

      std::vector<Formula> items;
      bool changed = false;
      for (auto& x : flatten(f, op))
        {
          if (x.op() == absorbing)
            return Formula::make(absorbing, {});
          if (x.op() == unit || contains(items, x))
            {
              changed = true;
              continue;
            }
          items.push_back(std::move(x));
        }
      for (const auto& x : items)
        if (x.op() == Op::Not && contains(items, x.operand()))
          return Formula::make(absorbing, {});
      for (std::size_t i; (i = find_redundant(items, op)) != std::string::npos;)
        {
          items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
        }
      if (!changed)
        return f;
      if (items.empty())
        return Formula::make(unit, {});
      Formula out = items[0];
      for (std::size_t i = 1; i < items.size(); ++i)
        out = Formula::make(op, {std::move(out), items[i]});
      return out;
    }

    // One rewrite at the root; children are already simplified.
    Formula rewrite(const Formula& f)
    {
      switch (f.op())
        {
        case Op::Atom:
        case Op::True:
        case Op::False:
          return f;
        case Op::Not:
          {
            const Formula& a = f.operand();
            if (a.op() == Op::True)
              return ff();
            if (a.op() == Op::False)
              return tt();
            if (a.op() == Op::Not)
              return a.operand();
            return f;
          }
        case Op::And:
        case Op::Or:
          return rewrite_assoc(f);
        case Op::Implies:
          {
            const Formula& a = f.lhs();
            const Formula& b = f.rhs();
            if (a.op() == Op::True)
              return b;
            if (a.op() == Op::False || b.op() == Op::True || a == b)
              return tt();
            if (b.op() == Op::False)
              return lnot(a);
            return f;
          }
        case Op::G:
        case Op::F:
          {
            const Formula& a = f.operand();
            if (a.is_constant())
              return a;
            if (a.op() == f.op())
              return a;
            return f;
          }
        case Op::X:
          return f.operand().is_constant() ? f.operand() : f;
        case Op::W:
          {
            const Formula& a = f.lhs();
            const Formula& b = f.rhs();
            if (b.op() == Op::True || a.op() == Op::True)
              return tt();
            if (a.op() == Op::False || implies_syntactically(a, b))
              return b;
            // every position satisfies a or b, so a holds until b or forever
            if (tautology_syntactically(a, b))
              return tt();
            if (b.op() == Op::False)
              return globally(a);
            return f;
          }
        case Op::U:
          {
            const Formula& a = f.lhs();
            const Formula& b = f.rhs();
            if (b.is_constant())
              return b;
            if (a.op() == Op::False || implies_syntactically(a, b))
              return b;
            if (a.op() == Op::True)
              return eventually(b);
            return f;
          }
        }
      return f;
    }

    Formula simp(const Formula& f)
    {
      if (f.kids().empty())
        return f;
      std::vector<Formula> kids;
      bool changed = false;
      for (const auto& k : f.kids())
        {
          kids.push_back(simp(k));
          changed = changed || !(kids.back() == k);
        }
      Formula g = changed ? Formula::make(f.op(), std::move(kids)) : f;
      Formula h = rewrite(g);
      if (h == g)
        return g;
      // A rule may build a fresh node (G, F, !) over simplified operands.
      return simp(h);
    }
  }

  Formula simplify(const Formula& f)
  {
    Formula cur = f;
    for (;;)
      {
        Formula next = simp(cur);
        if (next == cur)
          return cur;
        cur = std::move(next);
      }
  }
}
