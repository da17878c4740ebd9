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

// Test-side oracles and generators.  The evaluator here follows the
// textbook semantics position by position and shares no code with the
// library's bitmask evaluator.

#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "edcnl/lasso.hpp"
#include "edcnl/ltl.hpp"
#include "edcnl/propexpr.hpp"
#include "edcnl/sup.hpp"

namespace testsupport
{
  using edcnl::PropExpr;
  using edcnl::Valuation;
  using edcnl::ltl::Formula;
  using edcnl::ltl::LassoTrace;
  using edcnl::ltl::Op;

  inline std::size_t succ(const LassoTrace& t, std::size_t i)
  {
    return i + 1 < t.length() ? i + 1 : t.prefix.size();
  }

  inline bool atom_holds(const PropExpr& p, const Valuation& v)
  {
    switch (p.kind())
      {
      case PropExpr::Kind::Var:
        return v.bool_of(p.name());
      case PropExpr::Kind::Compare:
        {
          auto x = v.int_of(p.name());
          auto y = p.literal();
          switch (p.op())
            {
            case edcnl::CmpOp::Lt: return x < y;
            case edcnl::CmpOp::Le: return x <= y;
            case edcnl::CmpOp::Eq: return x == y;
            case edcnl::CmpOp::Ne: return x != y;
            case edcnl::CmpOp::Ge: return x >= y;
            case edcnl::CmpOp::Gt: return x > y;
            }
          return false;
        }
      default:
        throw std::logic_error("unexpected atom kind");
      }
  }

  // Every position reachable from i is visited within length() steps.
  inline bool holds(const Formula& f, const LassoTrace& t, std::size_t i)
  {
    const std::size_t n = t.length();
    switch (f.op())
      {
      case Op::Atom: return atom_holds(f.prop(), t.at(i));
      case Op::True: return true;
      case Op::False: return false;
      case Op::Not: return !holds(f.operand(), t, i);
      case Op::And: return holds(f.lhs(), t, i) && holds(f.rhs(), t, i);
      case Op::Or: return holds(f.lhs(), t, i) || holds(f.rhs(), t, i);
      case Op::Implies: return !holds(f.lhs(), t, i) || holds(f.rhs(), t, i);
      case Op::X: return holds(f.operand(), t, succ(t, i));
      case Op::G:
        for (std::size_t k = 0, p = i; k <= n; ++k, p = succ(t, p))
          if (!holds(f.operand(), t, p))
            return false;
        return true;
      case Op::F:
        for (std::size_t k = 0, p = i; k <= n; ++k, p = succ(t, p))
          if (holds(f.operand(), t, p))
            return true;
        return false;
      case Op::U:
        for (std::size_t k = 0, p = i; k <= n; ++k, p = succ(t, p))
          {
            if (holds(f.rhs(), t, p))
              return true;
            if (!holds(f.lhs(), t, p))
              return false;
          }
        return false;
      case Op::W:
        return holds(Formula::make(Op::G, {f.lhs()}), t, i)
               || holds(Formula::make(Op::U, {f.lhs(), f.rhs()}), t, i);
      }
    return false;
  }

  inline bool holds(const Formula& f, const LassoTrace& t) { return holds(f, t, 0); }

  using Rng = std::mt19937_64;

  inline std::size_t pick(Rng& rng, std::size_t n)
  {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }

  inline Valuation random_state(Rng& rng, const std::vector<std::string>& atoms)
  {
    Valuation v;
    for (const auto& a : atoms)
      v.set_bool(a, pick(rng, 2) == 1);
    return v;
  }

  inline LassoTrace random_lasso(Rng& rng, const std::vector<std::string>& atoms,
                                 std::size_t max_prefix = 4, std::size_t max_loop = 4)
  {
    LassoTrace t;
    std::size_t p = pick(rng, max_prefix + 1);
    std::size_t l = 1 + pick(rng, max_loop);
    for (std::size_t i = 0; i < p; ++i)
      t.prefix.push_back(random_state(rng, atoms));
    for (std::size_t i = 0; i < l; ++i)
      t.loop.push_back(random_state(rng, atoms));
    return t;
  }

  inline Formula random_formula(Rng& rng, const std::vector<std::string>& atoms, int depth)
  {
    using namespace edcnl::ltl;
    if (depth <= 0 || pick(rng, 5) == 0)
      {
        std::size_t k = pick(rng, atoms.size() + 2);
        if (k == atoms.size())
          return tt();
        if (k == atoms.size() + 1)
          return ff();
        return atom(atoms[k]);
      }
    static const Op ops[] = {Op::Not, Op::And, Op::Or, Op::Implies, Op::G,
                             Op::F,   Op::X,   Op::U,  Op::W};
    Op op = ops[pick(rng, std::size(ops))];
    if (op == Op::Not || op == Op::G || op == Op::F || op == Op::X)
      return Formula::make(op, {random_formula(rng, atoms, depth - 1)});
    return Formula::make(op, {random_formula(rng, atoms, depth - 1),
                              random_formula(rng, atoms, depth - 1)});
  }

  /// Non-constant propositional expression over `vars`.
  inline PropExpr random_prop(Rng& rng, const std::vector<std::string>& vars, int depth)
  {
    if (depth <= 0 || pick(rng, 3) == 0)
      {
        if (pick(rng, 4) == 0)
          return PropExpr::compare(vars[pick(rng, vars.size())],
                                   static_cast<edcnl::CmpOp>(pick(rng, 6)),
                                   static_cast<std::int64_t>(pick(rng, 200)) - 100);
        return PropExpr::var(vars[pick(rng, vars.size())]);
      }
    switch (pick(rng, 3))
      {
      case 0: return PropExpr::negate(random_prop(rng, vars, depth - 1));
      case 1: return PropExpr::conj(random_prop(rng, vars, depth - 1), random_prop(rng, vars, depth - 1));
      default: return PropExpr::disj(random_prop(rng, vars, depth - 1), random_prop(rng, vars, depth - 1));
      }
  }

  /// Trace for the SUP examples: `inp_1` true exactly at the given ticks.
  inline edcnl::sup::Trace pulse_trace(std::size_t length, const std::vector<std::size_t>& ticks)
  {
    edcnl::sup::Trace tr(length);
    for (std::size_t t = 0; t < length; ++t)
      {
        bool on = std::find(ticks.begin(), ticks.end(), t) != ticks.end();
        tr[t].set_bool("inp_1", on);
      }
    return tr;
  }

  inline edcnl::sup::Trace periodic_trace(std::size_t length, std::size_t period)
  {
    std::vector<std::size_t> ticks;
    for (std::size_t t = period; t < length; t += period)
      ticks.push_back(t);
    return pulse_trace(length, ticks);
  }

  inline edcnl::sup::SupParameters periodic_params(std::uint64_t amin, std::uint64_t amax)
  {
    auto p = edcnl::sup::default_params(PropExpr::constant(true), PropExpr::var("inp_1"));
    p.ase = PropExpr::constant(true);
    p.ac = PropExpr::negate(PropExpr::var("inp_1"));
    p.amin = edcnl::sup::TimeBound::finite(amin);
    p.amax = edcnl::sup::TimeBound::finite(amax);
    return p;
  }
}
