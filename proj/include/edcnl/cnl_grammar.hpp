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

// Grammar of requirement phrases.  One rule table drives both the
// recogniser and grammar_export(), so the published EBNF is the grammar
// that is actually parsed.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edcnl/pattern.hpp"

namespace edcnl::cnl
{
  struct PhraseToken
  {
    enum class Kind { Word, Comma, Period, Slot };
    Kind kind;
    /// Word text, or the slot content between the quotes.
    std::string text;
    /// Set for `<attribute>` markers in template text.
    std::optional<edtl::Attribute> marker;
    /// Byte offset in the source text (of the content, for slots).
    std::size_t pos;
  };

  /// \brief Splits a phrase or template into words, commas, periods and slots.
  ///
  /// Slots are `'...'` (typographic single quotes accepted) or `<attribute>`
  /// markers.  Throws SyntaxError.
  std::vector<PhraseToken> tokenize_phrase(std::string_view text);

  /// \brief Checks tokens against the grammar; an optional final period is
  /// allowed.
  ///
  /// Marker slots must sit where the grammar expects that attribute; quoted
  /// slots fit any attribute.  Throws SyntaxError at the furthest position
  /// reached, listing what was expected there.
  void check_grammar(const std::vector<PhraseToken>& tokens, std::string_view text);

  /// The complete grammar as EBNF text.
  std::string grammar_export();
}
