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

#include "edcnl/cnl.hpp"

#include <algorithm>
#include <set>

#include "edcnl/error.hpp"

namespace edcnl::cnl
{
  using classify::ClassificationReport;
  using edtl::Attribute;
  using edtl::AttributeCombination;
  using edtl::Tristate;

  namespace
  {
    const classify::SemanticClass* find_class(int id, const ClassificationReport& report)
    {
      for (const auto& c : report.classes)
        if (c.id == id)
          return &c;
      return nullptr;
    }

    bool has_member(const classify::SemanticClass& cls, const AttributeCombination& c)
    {
      return std::any_of(cls.members.begin(), cls.members.end(),
                         [&](const auto& m) { return m.combination == c; });
    }

    std::vector<PhraseToken> without_period(std::vector<PhraseToken> toks)
    {
      if (!toks.empty() && toks.back().kind == PhraseToken::Kind::Period)
        toks.pop_back();
      return toks;
    }

    bool skeleton_matches(const std::vector<PhraseToken>& phrase,
                          const std::vector<PhraseToken>& templ)
    {
      if (phrase.size() != templ.size())
        return false;
      for (std::size_t i = 0; i < phrase.size(); ++i)
        {
          if (phrase[i].kind != templ[i].kind)
            return false;
          if (phrase[i].kind == PhraseToken::Kind::Word && phrase[i].text != templ[i].text)
            return false;
        }
      return true;
    }

    std::string marker(Attribute a) { return "<" + std::string(edtl::name_of(a)) + ">"; }
  }

  std::string_view to_string(Provenance p)
  {
    switch (p)
      {
      case Provenance::Paper: return "paper";
      case Provenance::Assistant: return "assistant";
      case Provenance::Manual: return "manual";
      }
    return "manual";
  }

  Provenance provenance_named(std::string_view name)
  {
    if (name == "paper")
      return Provenance::Paper;
    if (name == "assistant")
      return Provenance::Assistant;
    if (name == "manual")
      return Provenance::Manual;
    throw Error("unknown provenance '" + std::string(name) + "'");
  }

  const CnlTemplate* CnlCorpus::renderable_for(int class_id) const
  {
    for (const auto& t : templates)
      if (t.class_id == class_id && t.renderable)
        return &t;
    return nullptr;
  }

  AttributeCombination authoring_combination(const CnlTemplate& t,
                                             const ClassificationReport& report)
  {
    if (t.combination)
      return *t.combination;
    const auto* cls = find_class(t.class_id, report);
    if (!cls)
      throw Error("no class " + std::to_string(t.class_id) + " in the report");
    return cls->representative;
  }

  std::vector<Diagnostic> validate_template(const CnlTemplate& t, const ClassificationReport& report)
  {
    std::vector<Diagnostic> out;
    const auto* cls = find_class(t.class_id, report);
    if (!cls)
      {
        out.push_back({"no class " + std::to_string(t.class_id) + " in the report", std::nullopt});
        return out;
      }
    AttributeCombination comb = t.combination ? *t.combination : cls->representative;
    if (t.combination && !has_member(*cls, comb))
      out.push_back({"combination " + comb.key() + " is not in class "
                       + std::to_string(t.class_id), std::nullopt});

    std::vector<PhraseToken> toks;
    try
      {
        toks = tokenize_phrase(t.text);
      }
    catch (const SyntaxError& e)
      {
        out.push_back({e.what(), e.position()});
        return out;
      }

    std::set<Attribute> slots;
    for (const auto& tok : toks)
      {
        if (tok.kind != PhraseToken::Kind::Slot)
          continue;
        if (!tok.marker)
          {
            out.push_back({"quoted text '" + tok.text + "' is not a slot marker", tok.pos});
            continue;
          }
        slots.insert(*tok.marker);
        if (comb[*tok.marker] != Tristate::Var)
          out.push_back({"slot for constant attribute " + marker(*tok.marker), tok.pos});
      }
    for (auto a : edtl::all_attributes)
      if (comb[a] == Tristate::Var && !slots.contains(a))
        out.push_back({"missing slot " + marker(a), std::nullopt});

    try
      {
        check_grammar(toks, t.text);
      }
    catch (const SyntaxError& e)
      {
        out.push_back({std::string("not derivable from the grammar: ") + e.what(), e.position()});
      }
    return out;
  }

  std::vector<Diagnostic> validate_corpus(const CnlCorpus& corpus, const ClassificationReport& report)
  {
    std::vector<Diagnostic> out;
    std::set<int> seen;
    for (const auto& t : corpus.templates)
      {
        if (t.renderable)
          {
            if (!seen.insert(t.class_id).second)
              out.push_back({"class " + std::to_string(t.class_id)
                               + " has more than one renderable template", std::nullopt});
            for (auto& d : validate_template(t, report))
              {
                d.message = "template \"" + t.text + "\": " + d.message;
                out.push_back(std::move(d));
              }
          }
        else if (t.note.empty())
          out.push_back({"non-renderable template \"" + t.text + "\" carries no note", std::nullopt});
      }
    return out;
  }

  std::string fill_template(std::string_view text, const std::map<Attribute, std::string>& slots)
  {
    std::string out;
    std::size_t i = 0;
    while (i < text.size())
      {
        if (text[i] == '<')
          {
            std::size_t j = text.find('>', i);
            if (j != std::string_view::npos)
              if (auto a = edtl::attribute_named(text.substr(i + 1, j - i - 1)))
                {
                  auto it = slots.find(*a);
                  if (it == slots.end())
                    throw Error("no text for slot " + marker(*a));
                  out += "'" + it->second + "'";
                  i = j + 1;
                  continue;
                }
          }
        out += text[i++];
      }
    return out;
  }

  std::string render_requirement(const edtl::Requirement& r, const CnlCorpus& corpus,
                                 const ClassificationReport& report)
  {
    auto comb = edtl::combination_of(r);
    const auto& cls = classify::canonical_class(comb, report);
    const CnlTemplate* t = corpus.renderable_for(cls.id);
    if (!t)
      {
        std::vector<std::string> notes;
        for (const auto& other : corpus.templates)
          if (other.class_id == cls.id)
            {
              auto n = other.note.empty() ? std::string("template marked non-renderable") : other.note;
              if (std::find(notes.begin(), notes.end(), n) == notes.end())
                notes.push_back(n);
            }
        std::string detail = notes.empty() ? "class not in corpus" : notes.front();
        for (std::size_t i = 1; i < notes.size(); ++i)
          detail += "; " + notes[i];
        throw NoTemplate(cls.id, detail);
      }

    const auto& tmember = cls.member(authoring_combination(*t, report));
    const auto& rmember = cls.member(comb);
    std::map<Attribute, std::string> slots;
    for (auto a : edtl::all_attributes)
      {
        if (tmember.combination[a] != Tristate::Var)
          continue;
        auto canon = tmember.atom_map.find(std::string(edtl::abbreviation_of(a)));
        if (canon == tmember.atom_map.end())
          throw NoTemplate(cls.id, "template slot " + marker(a) + " has no role in the class formula");
        std::optional<Attribute> source;
        for (auto b : edtl::all_attributes)
          {
            auto it = rmember.atom_map.find(std::string(edtl::abbreviation_of(b)));
            if (it != rmember.atom_map.end() && it->second == canon->second)
              source = b;
          }
        if (!source)
          throw NoTemplate(cls.id, "no attribute of " + comb.key() + " fills slot " + marker(a));
        slots[a] = render_prop(r[*source]);
      }
    return fill_template(t->text, slots);
  }

  ParsedPhrase parse_requirement(std::string_view text, const CnlCorpus& corpus,
                                 const ClassificationReport& report)
  {
    auto toks = tokenize_phrase(text);
    if (toks.empty())
      throw SyntaxError("empty phrase", 0);
    check_grammar(toks, text);
    auto phrase = without_period(toks);

    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < corpus.templates.size(); ++i)
      {
        const auto& t = corpus.templates[i];
        std::vector<PhraseToken> ttoks;
        try
          {
            ttoks = without_period(tokenize_phrase(t.text));
          }
        catch (const SyntaxError&)
          {
            continue;
          }
        if (!skeleton_matches(phrase, ttoks))
          continue;
        bool duplicate = std::any_of(hits.begin(), hits.end(), [&](std::size_t h) {
          const auto& o = corpus.templates[h];
          return o.class_id == t.class_id && o.text == t.text
                 && authoring_combination(o, report) == authoring_combination(t, report);
        });
        if (!duplicate)
          hits.push_back(i);
      }
    if (hits.empty())
      throw Error("phrase matches no corpus template");
    if (hits.size() > 1)
      {
        std::vector<int> ids;
        std::string what = "phrase matches " + std::to_string(hits.size()) + " templates:";
        for (auto h : hits)
          {
            ids.push_back(corpus.templates[h].class_id);
            what += " class " + std::to_string(corpus.templates[h].class_id) + " \""
                    + corpus.templates[h].text + "\";";
          }
        what.pop_back();
        throw AmbiguousPhrase(what, std::move(ids));
      }

    ParsedPhrase out;
    out.template_index = hits[0];
    const CnlTemplate& t = corpus.templates[hits[0]];
    auto comb = authoring_combination(t, report);
    auto ttoks = without_period(tokenize_phrase(t.text));

    edtl::Requirement r;
    for (auto a : edtl::all_attributes)
      if (comb[a] != Tristate::Var)
        r.set(a, PropExpr::constant(comb[a] == Tristate::True));

    std::map<Attribute, PropExpr> filled;
    for (std::size_t i = 0; i < phrase.size(); ++i)
      {
        if (phrase[i].kind != PhraseToken::Kind::Slot)
          continue;
        Attribute a = *ttoks[i].marker;
        PropExpr e;
        try
          {
            e = parse_prop(phrase[i].text);
          }
        catch (const SyntaxError& err)
          {
            throw SyntaxError("in slot " + marker(a) + ": " + err.what(),
                              phrase[i].pos + err.position());
          }
        auto [it, fresh] = filled.emplace(a, e);
        if (!fresh && !(it->second == e))
          throw SyntaxError("slot " + marker(a) + " is given two different expressions",
                            phrase[i].pos);
      }
    for (auto a : edtl::all_attributes)
      {
        if (comb[a] != Tristate::Var)
          continue;
        auto it = filled.find(a);
        if (it != filled.end())
          {
            r.set(a, it->second);
            if (it->second.is_const())
              out.warnings.push_back("slot " + marker(a) + " holds a constant");
          }
        else
          {
            std::string abbr(edtl::abbreviation_of(a));
            r.set(a, PropExpr::var(abbr));
            out.warnings.push_back("the phrase does not mention " + marker(a)
                                   + "; it is left as '" + abbr + "'");
          }
      }
    if (!t.renderable)
      out.warnings.push_back("template is not renderable: " + t.note);

    out.class_id = classify::canonical_class(edtl::combination_of(r), report).id;
    if (out.class_id != t.class_id)
      out.warnings.push_back("constant slot values move the requirement to class "
                             + std::to_string(out.class_id));
    out.requirement = std::move(r);
    return out;
  }

  CnlCorpus seed_corpus(const ClassificationReport& report)
  {
    struct Seed
    {
      const char* key;
      const char* text;
      bool renderable;
      const char* note;
    };
    static const Seed seeds[] = {
      {"vvvvvv",
       "After <trigger>, <invariant> is valid until either <release> or <reaction>, "
       "and <reaction> must occur within <delay> from <final>.",
       true, "base pattern"},
      {"vtttvf", "After <trigger>, <reaction> occurs now.", true, ""},
      {"vvtvvv",
       "After <trigger>, <invariant> is valid until either <release> or <reaction>, "
       "and <reaction> occurs within <delay> from now.",
       true, ""},
      {"vvvttf", "After <trigger>, <invariant> is valid forever.", false,
       "constant reaction: the phrase has a broader semantics than the formula"},
      {"vtttvf", "After <trigger>, <reaction> must occur.", false,
       "phrase obtained with the formula in the prompt; not derivable from the grammar"},
      {"vvtvvv",
       "After <trigger>, <invariant> must hold and <delay> must not occur until "
       "either <release> or <reaction> occurs.",
       false, "phrase obtained with the formula in the prompt; not derivable from the grammar"},
      {"vvvttf", "After <trigger>, <invariant> must hold until <final> occurs.", false,
       "phrase obtained with the formula in the prompt; not derivable from the grammar"},
    };

    CnlCorpus corpus;
    for (const auto& s : seeds)
      {
        CnlTemplate t;
        t.combination = AttributeCombination::from_key(s.key);
        t.class_id = classify::canonical_class(*t.combination, report).id;
        t.text = s.text;
        t.provenance = Provenance::Paper;
        t.renderable = s.renderable;
        t.note = s.note;
        corpus.templates.push_back(std::move(t));
      }
    return corpus;
  }
}
