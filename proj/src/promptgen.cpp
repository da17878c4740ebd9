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

#include "edcnl/promptgen.hpp"

#include <array>

#include "edcnl/error.hpp"

namespace edcnl::promptgen
{
  using edtl::Attribute;
  using edtl::Tristate;

  namespace
  {
    constexpr std::array<Attribute, 6> assignment_order = {
      Attribute::Trigger, Attribute::Release, Attribute::Delay,
      Attribute::Final, Attribute::Reaction, Attribute::Invariant,
    };

    std::string replace_all(std::string s, std::string_view from, std::string_view to)
    {
      for (std::size_t at = 0; (at = s.find(from, at)) != std::string::npos; at += to.size())
        s.replace(at, from.size(), to);
      return s;
    }

    std::string first_sentence(std::string_view text)
    {
      std::size_t b = text.find_first_not_of(" \t\r\n");
      if (b == std::string_view::npos)
        return {};
      bool quoted = false;
      for (std::size_t i = b; i < text.size(); ++i)
        {
          if (text[i] == '\'')
            quoted = !quoted;
          else if (text[i] == '.' && !quoted)
            return std::string(text.substr(b, i - b + 1));
        }
      std::size_t e = text.find_last_not_of(" \t\r\n");
      return std::string(text.substr(b, e - b + 1));
    }
  }

  std::string prompt_basic(const edtl::AttributeCombination& c, bool include_explain)
  {
    std::string assignments;
    for (auto a : assignment_order)
      {
        if (c[a] == Tristate::Var)
          continue;
        if (!assignments.empty())
          assignments += ", ";
        assignments += std::string(edtl::name_of(a)) + " = "
                       + (c[a] == Tristate::True ? "true" : "false");
      }
    if (assignments.empty())
      throw AllVariable();
    std::string out = "Reformulate in English the following sentence \"";
    out += base_sentence;
    out += "\" if always " + assignments + ".";
    if (include_explain)
      out += " Explain why the resulting sentence is correct.";
    return out;
  }

  std::string prompt_with_semantics(const edtl::AttributeCombination& c,
                                    const classify::ClassificationReport& report,
                                    bool include_explain)
  {
    std::string out = prompt_basic(c, include_explain);
    const auto& m = classify::canonical_class(c, report).member(c);
    out += " The resulting sentence must correspond to the following LTL formula \""
           + ltl::render_ltl(m.formula) + "\".";
    return out;
  }

  const std::string& prompt_hints()
  {
    static const std::string text =
      "Remember that if invariant is true, then the statement does not depend on the "
      "invariant, final = true means that final is now, final = false means that final "
      "never happens, delay = false means that the delay is infinite, delay = true means "
      "that there is no delay, reaction = false means that we do not wait for the "
      "reaction, reaction = true means that the statement does not depend on the reaction.";
    return text;
  }

  PromptBundle make_bundle(const edtl::AttributeCombination& c,
                           const classify::ClassificationReport& report,
                           bool include_explain, bool with_semantics, bool hints)
  {
    PromptBundle b{c, prompt_basic(c, include_explain), std::nullopt, std::nullopt};
    if (with_semantics)
      b.with_semantics = prompt_with_semantics(c, report, include_explain);
    if (hints)
      b.hints = prompt_hints();
    return b;
  }

  std::string bundle_text(const PromptBundle& b)
  {
    std::string out = b.with_semantics ? *b.with_semantics : b.basic;
    if (b.hints)
      out += "\n\n" + *b.hints;
    return out + "\n";
  }

  IngestResult ingest_response(const edtl::AttributeCombination& c, std::string_view text,
                               const cnl::CnlCorpus& corpus,
                               const classify::ClassificationReport& report)
  {
    std::string norm(text);
    norm = replace_all(norm, "\xE2\x80\x98", "'");
    norm = replace_all(norm, "\xE2\x80\x99", "'");
    norm = replace_all(norm, "\xE2\x80\x9C", "\"");
    norm = replace_all(norm, "\xE2\x80\x9D", "\"");
    std::string sentence = first_sentence(norm);

    if (sentence.empty())
      return std::vector<cnl::Diagnostic>{{"response is empty", std::nullopt}};

    // Quoted attribute names become markers; any other quoted text stays
    // and is reported by the validator.
    std::string templ;
    for (std::size_t i = 0; i < sentence.size(); ++i)
      {
        std::size_t j = sentence[i] == '\'' ? sentence.find('\'', i + 1) : std::string::npos;
        if (j == std::string::npos)
          {
            templ += sentence[i];
            continue;
          }
        std::string inner = sentence.substr(i + 1, j - i - 1);
        templ += edtl::attribute_named(inner) ? "<" + inner + ">" : sentence.substr(i, j - i + 1);
        i = j;
      }

    cnl::CnlTemplate t;
    t.combination = c;
    t.class_id = classify::canonical_class(c, report).id;
    t.text = templ;
    t.provenance = cnl::Provenance::Assistant;
    auto diags = cnl::validate_template(t, report);
    if (!diags.empty())
      return diags;

    if (c[Attribute::Reaction] != Tristate::Var)
      {
        t.renderable = false;
        t.note = "constant reaction: the phrase has a broader semantics than the formula";
      }
    else if (corpus.renderable_for(t.class_id))
      {
        t.renderable = false;
        t.note = "class already has a renderable template";
      }
    return t;
  }
}
