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

// Shared tokenizer for propositional and LTL formula text.

#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "edcnl/error.hpp"
#include "edcnl/propexpr.hpp"

namespace edcnl::detail
{
  enum class TokKind { Ident, Int, Quoted, Sym, End };

  struct Token
  {
    TokKind kind;
    std::string text;  // symbols are canonical ASCII spellings
    std::size_t pos;
  };

  inline bool ident_start(char c)
  {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  }

  inline bool ident_char(char c)
  {
    return ident_start(c) || (c >= '0' && c <= '9');
  }

  inline std::vector<Token> tokenize(std::string_view text)
  {
    // Longest spellings first.
    static const std::pair<std::string_view, std::string_view> symbols[] = {
      {"->", "->"}, {"\xE2\x86\x92", "->"}, {"&&", "&"}, {"||", "|"},
      {"<=", "<="}, {">=", ">="}, {"!=", "!="}, {"==", "="},
      {"\xE2\x89\xA4", "<="}, {"\xE2\x89\xA5", ">="}, {"\xE2\x89\xA0", "!="},
      {"\xE2\x88\xA7", "&"}, {"\xE2\x88\xA8", "|"}, {"\xC2\xAC", "!"},
      {"&", "&"}, {"|", "|"}, {"!", "!"}, {"(", "("}, {")", ")"},
      {"<", "<"}, {">", ">"}, {"=", "="}, {"-", "-"},
    };

    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size())
      {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
          {
            ++i;
            continue;
          }
        if (ident_start(c))
          {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j]))
              ++j;
            out.push_back({TokKind::Ident, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
          }
        if (c >= '0' && c <= '9')
          {
            std::size_t j = i;
            while (j < text.size() && text[j] >= '0' && text[j] <= '9')
              ++j;
            out.push_back({TokKind::Int, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
          }
        if (c == '"')
          {
            std::size_t j = text.find('"', i + 1);
            if (j == std::string_view::npos)
              throw SyntaxError("unterminated quoted identifier", i);
            auto name = text.substr(i + 1, j - i - 1);
            if (!is_identifier(name))
              throw SyntaxError("quoted text is not an identifier", i);
            out.push_back({TokKind::Quoted, std::string(name), i});
            i = j + 1;
            continue;
          }
        bool matched = false;
        for (auto [spelling, canon] : symbols)
          if (text.substr(i).starts_with(spelling))
            {
              out.push_back({TokKind::Sym, std::string(canon), i});
              i += spelling.size();
              matched = true;
              break;
            }
        if (!matched)
          throw SyntaxError("unknown token", i);
      }
    out.push_back({TokKind::End, "", text.size()});
    return out;
  }

  inline bool is_cmp(const Token& t)
  {
    return t.kind == TokKind::Sym
      && (t.text == "<" || t.text == "<=" || t.text == "=" || t.text == "!="
          || t.text == ">=" || t.text == ">");
  }

  inline CmpOp cmp_of(const std::string& s)
  {
    if (s == "<") return CmpOp::Lt;
    if (s == "<=") return CmpOp::Le;
    if (s == "=") return CmpOp::Eq;
    if (s == "!=") return CmpOp::Ne;
    if (s == ">=") return CmpOp::Ge;
    return CmpOp::Gt;
  }

  /// Reads `['-'] Int` starting at `i`; advances `i` past it.
  inline std::int64_t read_int(const std::vector<Token>& toks, std::size_t& i)
  {
    std::string digits;
    std::size_t pos = toks[i].pos;
    if (toks[i].kind == TokKind::Sym && toks[i].text == "-")
      {
        digits = "-";
        ++i;
      }
    if (toks[i].kind != TokKind::Int)
      throw SyntaxError("expected integer literal", toks[i].pos);
    digits += toks[i].text;
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || p != digits.data() + digits.size())
      throw SyntaxError("integer literal out of range", pos);
    ++i;
    return v;
  }
}
