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

#include "edcnl/lasso.hpp"

#include <map>

#include "bitlasso.hpp"
#include "edcnl/error.hpp"

namespace edcnl::ltl
{
  namespace detail
  {
    Program compile(const Formula& f, const std::map<std::string, int>& atom_index)
    {
      Program p;
      auto emit = [&](auto&& self, const Formula& n) -> int {
        Instr ins{n.op(), -1, -1, -1};
        if (n.op() == Op::Atom)
          ins.atom = atom_index.at(render_ltl(n));
        else if (!n.kids().empty())
          {
            ins.a = self(self, n.kids()[0]);
            if (n.kids().size() > 1)
              ins.b = self(self, n.kids()[1]);
          }
        p.code.push_back(ins);
        return static_cast<int>(p.code.size()) - 1;
      };
      emit(emit, f);
      return p;
    }

    bool run(const Program& prog, const std::uint64_t* atoms, int prefix, int length,
             std::vector<std::uint64_t>& v)
    {
      const std::uint64_t all = length >= 64 ? ~0ULL : (1ULL << length) - 1;
      // bit i of next(m) is bit succ(i) of m; succ(length-1) = prefix
      auto next = [&](std::uint64_t m) {
        return (m >> 1) | (((m >> prefix) & 1ULL) << (length - 1));
      };
      v.resize(prog.code.size());
      for (std::size_t i = 0; i < prog.code.size(); ++i)
        {
          const Instr& in = prog.code[i];
          std::uint64_t r = 0;
          switch (in.op)
            {
            case Op::Atom: r = atoms[in.atom]; break;
            case Op::True: r = all; break;
            case Op::False: r = 0; break;
            case Op::Not: r = ~v[in.a] & all; break;
            case Op::And: r = v[in.a] & v[in.b]; break;
            case Op::Or: r = v[in.a] | v[in.b]; break;
            case Op::Implies: r = (~v[in.a] | v[in.b]) & all; break;
            case Op::X: r = next(v[in.a]); break;
            case Op::G:
              {
                r = all;  // greatest fixpoint
                for (;;)
                  {
                    std::uint64_t s = v[in.a] & next(r);
                    if (s == r)
                      break;
                    r = s;
                  }
                break;
              }
            case Op::F:
              {
                r = 0;  // least fixpoint
                for (;;)
                  {
                    std::uint64_t s = v[in.a] | next(r);
                    if (s == r)
                      break;
                    r = s;
                  }
                break;
              }
            case Op::U:
            case Op::W:
              {
                r = in.op == Op::W ? all : 0;
                for (;;)
                  {
                    std::uint64_t s = v[in.b] | (v[in.a] & next(r));
                    if (s == r)
                      break;
                    r = s;
                  }
                break;
              }
            }
          v[i] = r;
        }
      return v.back() & 1ULL;
    }
  }

  bool eval_lasso(const Formula& f, const LassoTrace& t)
  {
    if (t.loop.empty())
      throw Error("lasso loop must be nonempty");
    if (t.length() > 64)
      throw Error("lasso longer than 64 positions");
    auto leaves = atom_leaves(f);
    std::map<std::string, int> index;
    std::vector<std::uint64_t> masks;
    for (const auto& leaf : leaves)
      {
        index.emplace(render_ltl(leaf), static_cast<int>(masks.size()));
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < t.length(); ++i)
          if (eval_prop(leaf.prop(), t.at(i)))
            m |= 1ULL << i;
        masks.push_back(m);
      }
    auto prog = detail::compile(f, index);
    std::vector<std::uint64_t> scratch;
    return detail::run(prog, masks.data(), static_cast<int>(t.prefix.size()),
                       static_cast<int>(t.length()), scratch);
  }

  std::string render_lasso(const LassoTrace& t)
  {
    auto state = [](const Valuation& v) {
      std::string s = "{";
      bool first = true;
      for (const auto& [k, b] : v.bools())
        {
          s += (first ? "" : ", ") + k + "=" + (b ? "1" : "0");
          first = false;
        }
      for (const auto& [k, x] : v.ints())
        if (!v.bools().contains(k))
          {
            s += (first ? "" : ", ") + k + "=" + std::to_string(x);
            first = false;
          }
      return s + "}";
    };
    std::string out;
    for (const auto& v : t.prefix)
      out += state(v) + " ";
    out += "(";
    for (std::size_t i = 0; i < t.loop.size(); ++i)
      out += (i ? " " : "") + state(t.loop[i]);
    return out + ")^w";
  }
}
