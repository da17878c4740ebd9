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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edcnl/classify.hpp"
#include "edcnl/cnl_grammar.hpp"
#include "edcnl/pattern.hpp"

namespace edcnl::cnl
{
  enum class Provenance { Paper, Assistant, Manual };

  std::string_view to_string(Provenance p);
  /// Throws Error on an unknown name.
  Provenance provenance_named(std::string_view name);

  /// \brief A phrase pattern for one semantic class.
  ///
  /// Slot markers `<trigger>` ... `<release>` stand for the Var attributes of
  /// the authoring combination.  When `combination` is absent the class
  /// representative is the authoring combination.
  struct CnlTemplate
  {
    int class_id = 0;
    std::string text;
    Provenance provenance = Provenance::Manual;
    bool renderable = true;
    std::optional<edtl::AttributeCombination> combination;
    /// Reason a template is not renderable, or other review remarks.
    std::string note;

    friend bool operator==(const CnlTemplate&, const CnlTemplate&) = default;
  };

  struct CnlCorpus
  {
    int version = 1;
    std::vector<CnlTemplate> templates;

    const CnlTemplate* renderable_for(int class_id) const;
  };

  struct Diagnostic
  {
    std::string message;
    std::optional<std::size_t> position;
  };

  /// The combination whose Var attributes the template's slots name.
  edtl::AttributeCombination authoring_combination(const CnlTemplate& t,
                                                   const classify::ClassificationReport& report);

  /// \brief Checks class membership, slot set and grammar.
  ///
  /// Returns no diagnostics on success.
  std::vector<Diagnostic> validate_template(const CnlTemplate& t,
                                            const classify::ClassificationReport& report);

  /// Template diagnostics plus the one-renderable-template-per-class rule.
  std::vector<Diagnostic> validate_corpus(const CnlCorpus& corpus,
                                          const classify::ClassificationReport& report);

  /// \brief Phrase for `r` from its class's renderable template.
  ///
  /// Slots of the template are mapped to the attributes of `r` that play
  /// the same role in the class formula.  Throws NoTemplate.
  std::string render_requirement(const edtl::Requirement& r, const CnlCorpus& corpus,
                                 const classify::ClassificationReport& report);

  /// Replaces each marker by the quoted text given for its attribute.
  std::string fill_template(std::string_view text,
                            const std::map<edtl::Attribute, std::string>& slots);

  struct ParsedPhrase
  {
    edtl::Requirement requirement;
    int class_id = 0;
    /// Index of the matched template in the corpus.
    std::size_t template_index = 0;
    std::vector<std::string> warnings;
  };

  /// \brief Reads a phrase back into a requirement.
  ///
  /// The phrase must be grammatical and match exactly one template
  /// skeleton.  Slots set the Var attributes of the template's authoring
  /// combination; its constants are copied.  Throws SyntaxError,
  /// AmbiguousPhrase, or Error when no template matches.
  ParsedPhrase parse_requirement(std::string_view text, const CnlCorpus& corpus,
                                 const classify::ClassificationReport& report);

  /// Reference templates, with class ids taken from `report`.
  CnlCorpus seed_corpus(const classify::ClassificationReport& report);
}
