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

#include "edcnl/error.hpp"
#include "edcnl/ltl.hpp"
#include "lexer.hpp"

namespace edcnl::ltl
{
  namespace
  {
    using detail::Token;
    using detail::TokKind;

    //   impl    := until ['->' impl]
    //   until   := or [('U' | 'W') until]
    //   or      := and ('|' and)*
    //   and     := unary ('&' unary)*
    //   unary   := ('!' | 'not' | 'G' | 'F' | 'X') unary | primary
    //   primary := '(' impl ')' | 'true' | 'false' | name [cmp int]
    class LtlParser
    {
    public:
      explicit LtlParser(std::string_view text) : toks_(detail::tokenize(text)) {}

      Formula parse()
      {
        Formula f = impl();
        if (peek().kind != TokKind::End)
          throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
        return f;
      }

    private:
      const Token& peek() const { return toks_[i_]; }

      bool accept(TokKind kind, std::string_view text)
      {
        if (peek().kind == kind && peek().text == text)
          {
            ++i_;
            return true;
          }
        return false;
      }

      bool accept_sym(std::string_view s) { return accept(TokKind::Sym, s); }
      bool accept_word(std::string_view w) { return accept(TokKind::Ident, w); }

      Formula impl()
      {
        Formula lhs = until_level();
        if (accept_sym("->"))
          return implies(std::move(lhs), impl());
        return lhs;
      }

      Formula until_level()
      {
        Formula lhs = or_level();
        if (accept_word("U"))
          return until(std::move(lhs), until_level());
        if (accept_word("W"))
          return weak_until(std::move(lhs), until_level());
        return lhs;
      }

      Formula or_level()
      {
        Formula f = and_level();
        while (accept_sym("|") || accept_word("or"))
          f = lor(std::move(f), and_level());
        return f;
      }

      Formula and_level()
      {
        Formula f = unary();
        while (accept_sym("&") || accept_word("and"))
          f = land(std::move(f), unary());
        return f;
      }

      Formula unary()
      {
        if (accept_sym("!") || accept_word("not"))
          return lnot(unary());
        if (accept_word("G"))
          return globally(unary());
        if (accept_word("F"))
          return eventually(unary());
        if (accept_word("X"))
          return next(unary());
        return primary();
      }

      Formula primary()
      {
        const Token& t = peek();
        if (accept_sym("("))
          {
            Formula f = impl();
            if (!accept_sym(")"))
              throw SyntaxError("expected ')'", peek().pos);
            return f;
          }
        if (accept_word("true"))
          return tt();
        if (accept_word("false"))
          return ff();
        if ((t.kind == TokKind::Ident && !is_ltl_keyword(t.text))
            || t.kind == TokKind::Quoted)
          {
            std::string name = t.text;
            ++i_;
            if (detail::is_cmp(peek()))
              {
                CmpOp op = detail::cmp_of(peek().text);
                ++i_;
                return Formula::make_atom(
                  PropExpr::compare(std::move(name), op, detail::read_int(toks_, i_)));
              }
            return atom(std::move(name));
          }
        if (t.kind == TokKind::End)
          throw SyntaxError("unexpected end of formula", t.pos);
        throw SyntaxError("unexpected '" + t.text + "'", t.pos);
      }

      std::vector<Token> toks_;
      std::size_t i_ = 0;
    };
  }

  Formula parse_ltl(std::string_view text)
  {
    return LtlParser(text).parse();
  }
}
