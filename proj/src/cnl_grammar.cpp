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

#include "edcnl/cnl_grammar.hpp"

#include <algorithm>
#include <set>

#include "edcnl/error.hpp"

namespace edcnl::cnl
{
  using edtl::Attribute;

  namespace
  {
    struct Element;
    using Sequence = std::vector<Element>;

    struct Element
    {
      enum class Kind { Words, Comma, Ref, Slot, Optional, Choice };
      Kind kind;
      std::string text;  // Words: space separated; Ref: rule name
      Attribute attr = Attribute::Trigger;
      std::vector<Sequence> alts;  // Optional: one; Choice: several
    };

    Element words(std::string w) { return {Element::Kind::Words, std::move(w), {}, {}}; }
    Element comma() { return {Element::Kind::Comma, ",", {}, {}}; }
    Element ref(std::string r) { return {Element::Kind::Ref, std::move(r), {}, {}}; }
    Element slot(Attribute a) { return {Element::Kind::Slot, "", a, {}}; }
    Element optional(Sequence s) { return {Element::Kind::Optional, "", {}, {std::move(s)}}; }
    Element choice(std::vector<Sequence> alts) { return {Element::Kind::Choice, "", {}, std::move(alts)}; }

    struct Rule
    {
      std::string name;
      std::vector<Sequence> alts;
    };

    const std::vector<Rule>& rules()
    {
      using A = Attribute;
      static const std::vector<Rule> table = {
        {"Req", {
          {words("After"), slot(A::Trigger), comma(), ref("body_trig")},
          {slot(A::Invariant), words("is valid"), ref("body_inv")},
        }},
        {"body_trig", {
          {slot(A::Reaction), words("occurs"), ref("cond_rea")},
          {slot(A::Invariant), words("is valid"), ref("until_part"),
           optional({comma(), words("and"), ref("rea_part")})},
        }},
        {"cond_rea", {
          {words("now")},
          {words("from"), ref("fin_ref")},
          {words("within"), slot(A::Delay), words("from"), ref("fin_ref")},
        }},
        {"fin_ref", {
          {words("now")},
          {slot(A::Final)},
        }},
        {"until_part", {
          {words("until"), ref("until_evt")},
          {words("forever")},
        }},
        {"until_evt", {
          {words("either"), slot(A::Release), words("or"), slot(A::Reaction)},
          {slot(A::Final), optional({words("occurs")})},
          {slot(A::Reaction)},
          {slot(A::Release)},
        }},
        {"rea_part", {
          {slot(A::Reaction), choice({{words("must occur")}, {words("occurs")}}), ref("cond_rea")},
        }},
        {"body_inv", {
          {ref("until_part")},
          {words("forever")},
        }},
      };
      return table;
    }

    const Rule& rule_named(std::string_view name)
    {
      for (const auto& r : rules())
        if (r.name == name)
          return r;
      throw Error("grammar has no rule " + std::string(name));
    }

    std::vector<std::string> split_words(const std::string& s)
    {
      std::vector<std::string> out;
      std::size_t i = 0;
      while (i < s.size())
        {
          std::size_t j = s.find(' ', i);
          if (j == std::string::npos)
            j = s.size();
          out.push_back(s.substr(i, j - i));
          i = j + 1;
        }
      return out;
    }

    std::string slot_name(Attribute a) { return "<" + std::string(edtl::name_of(a)) + ">"; }

    // Backtracking recogniser returning every end position.
    class Matcher
    {
    public:
      explicit Matcher(const std::vector<PhraseToken>& toks) : toks_(toks) {}

      std::set<std::size_t> rule(const Rule& r, std::size_t pos)
      {
        std::set<std::size_t> out;
        for (const auto& alt : r.alts)
          out.merge(sequence(alt, 0, pos));
        return out;
      }

      std::size_t furthest() const { return furthest_; }
      const std::set<std::string>& expected() const { return expected_; }

      void fail(std::size_t pos, const std::string& what)
      {
        if (pos > furthest_)
          {
            furthest_ = pos;
            expected_.clear();
          }
        if (pos == furthest_)
          expected_.insert(what);
      }

    private:
      std::set<std::size_t> sequence(const Sequence& seq, std::size_t k, std::size_t pos)
      {
        if (k == seq.size())
          return {pos};
        std::set<std::size_t> out;
        for (std::size_t mid : element(seq[k], pos))
          out.merge(sequence(seq, k + 1, mid));
        return out;
      }

      std::set<std::size_t> element(const Element& e, std::size_t pos)
      {
        switch (e.kind)
          {
          case Element::Kind::Words:
            {
              std::size_t p = pos;
              for (const auto& w : split_words(e.text))
                {
                  if (p >= toks_.size() || toks_[p].kind != PhraseToken::Kind::Word
                      || toks_[p].text != w)
                    {
                      fail(p, "'" + w + "'");
                      return {};
                    }
                  ++p;
                }
              return {p};
            }
          case Element::Kind::Comma:
            if (pos < toks_.size() && toks_[pos].kind == PhraseToken::Kind::Comma)
              return {pos + 1};
            fail(pos, "','");
            return {};
          case Element::Kind::Slot:
            if (pos < toks_.size() && toks_[pos].kind == PhraseToken::Kind::Slot
                && (!toks_[pos].marker || *toks_[pos].marker == e.attr))
              return {pos + 1};
            fail(pos, slot_name(e.attr) + " slot");
            return {};
          case Element::Kind::Ref:
            return rule(rule_named(e.text), pos);
          case Element::Kind::Optional:
            {
              auto out = sequence(e.alts[0], 0, pos);
              out.insert(pos);
              return out;
            }
          case Element::Kind::Choice:
            {
              std::set<std::size_t> out;
              for (const auto& alt : e.alts)
                out.merge(sequence(alt, 0, pos));
              return out;
            }
          }
        return {};
      }

      const std::vector<PhraseToken>& toks_;
      std::size_t furthest_ = 0;
      std::set<std::string> expected_;
    };

    void render_sequence(const Sequence& seq, std::string& out);

    void render_element(const Element& e, std::string& out)
    {
      auto space = [&out] {
        if (!out.empty() && out.back() != ' ' && out.back() != '[' && out.back() != '(')
          out += ' ';
      };
      switch (e.kind)
        {
        case Element::Kind::Words:
          space();
          out += e.text;
          return;
        case Element::Kind::Comma:
          out += ',';
          return;
        case Element::Kind::Ref:
          space();
          out += "<" + e.text + ">";
          return;
        case Element::Kind::Slot:
          space();
          out += slot_name(e.attr);
          return;
        case Element::Kind::Optional:
          space();
          out += '[';
          render_sequence(e.alts[0], out);
          out += ']';
          return;
        case Element::Kind::Choice:
          space();
          out += '(';
          for (std::size_t i = 0; i < e.alts.size(); ++i)
            {
              if (i)
                out += " | ";
              render_sequence(e.alts[i], out);
            }
          out += ')';
          return;
        }
    }

    void render_sequence(const Sequence& seq, std::string& out)
    {
      for (const auto& e : seq)
        render_element(e, out);
    }
  }

  std::vector<PhraseToken> tokenize_phrase(std::string_view text)
  {
    static constexpr std::string_view open_typo = "\xE2\x80\x98";   // ‘
    static constexpr std::string_view close_typo = "\xE2\x80\x99";  // ’

    std::vector<PhraseToken> out;
    std::size_t i = 0;
    while (i < text.size())
      {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
          {
            ++i;
            continue;
          }
        bool typo = text.substr(i).starts_with(open_typo) || text.substr(i).starts_with(close_typo);
        if (c == '\'' || typo)
          {
            std::size_t start = i + (typo ? 3 : 1);
            std::size_t j = start;
            while (j < text.size() && text[j] != '\''
                   && !text.substr(j).starts_with(close_typo)
                   && !text.substr(j).starts_with(open_typo))
              ++j;
            if (j >= text.size())
              throw SyntaxError("unterminated slot quote", i);
            out.push_back({PhraseToken::Kind::Slot, std::string(text.substr(start, j - start)),
                           std::nullopt, start});
            i = j + (text[j] == '\'' ? 1 : 3);
            continue;
          }
        if (c == '<')
          {
            std::size_t j = text.find('>', i);
            if (j == std::string_view::npos)
              throw SyntaxError("unterminated slot marker", i);
            auto name = text.substr(i + 1, j - i - 1);
            auto attr = edtl::attribute_named(name);
            if (!attr)
              throw SyntaxError("unknown slot marker <" + std::string(name) + ">", i);
            out.push_back({PhraseToken::Kind::Slot, std::string(name), attr, i});
            i = j + 1;
            continue;
          }
        if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'))
          {
            std::size_t j = i;
            while (j < text.size()
                   && ((text[j] >= 'A' && text[j] <= 'Z') || (text[j] >= 'a' && text[j] <= 'z')))
              ++j;
            out.push_back({PhraseToken::Kind::Word, std::string(text.substr(i, j - i)),
                           std::nullopt, i});
            i = j;
            continue;
          }
        if (c == ',' || c == '.')
          {
            out.push_back({c == ',' ? PhraseToken::Kind::Comma : PhraseToken::Kind::Period,
                           std::string(1, c), std::nullopt, i});
            ++i;
            continue;
          }
        throw SyntaxError(std::string("unexpected character '") + c + "'", i);
      }
    return out;
  }

  void check_grammar(const std::vector<PhraseToken>& tokens, std::string_view text)
  {
    std::size_t n = tokens.size();
    if (n > 0 && tokens.back().kind == PhraseToken::Kind::Period)
      --n;
    std::vector<PhraseToken> body(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(n));
    Matcher m(body);
    auto ends = m.rule(rule_named("Req"), 0);
    if (ends.contains(n))
      return;
    for (std::size_t e : ends)
      m.fail(e, "end of sentence");
    std::size_t at = m.furthest();
    std::size_t pos = at < tokens.size() ? tokens[at].pos : text.size();
    std::string what = "expected ";
    bool first = true;
    for (const auto& x : m.expected())
      {
        what += (first ? "" : " or ") + x;
        first = false;
      }
    if (at < body.size())
      what += ", found '" + body[at].text + "'";
    throw SyntaxError(what, pos);
  }

  std::string grammar_export()
  {
    std::string out;
    out += "Sentence := Req [.]\n";
    for (const auto& r : rules())
      {
        std::string lhs = r.name == "Req" ? r.name : "<" + r.name + ">";
        std::string line = lhs + " :=";
        for (std::size_t i = 0; i < r.alts.size(); ++i)
          {
            std::string alt;
            render_sequence(r.alts[i], alt);
            line += (i ? " | " : " ") + alt;
          }
        out += line + "\n";
      }
    for (auto a : edtl::all_attributes)
      out += slot_name(a) + " := ' propexpr '\n";
    out += "propexpr := term (or term)*\n"
           "term := factor (and factor)*\n"
           "factor := not factor | ( propexpr ) | true | false | ident cmp int | ident\n"
           "cmp := < | <= | = | != | >= | >\n";
    return out;
  }
}
