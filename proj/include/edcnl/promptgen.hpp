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

// Prompt assembly for an AI assistant and ingestion of its answers.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edcnl/classify.hpp"
#include "edcnl/cnl.hpp"
#include "edcnl/pattern.hpp"

namespace edcnl::promptgen
{
  /// The base pattern sentence, unquoted.
  inline constexpr std::string_view base_sentence =
    "After 'trigger', 'invariant' is valid until either 'release' or 'reaction', "
    "and 'reaction' must occur within 'delay' from 'final'.";

  struct PromptBundle
  {
    edtl::AttributeCombination combination;
    std::string basic;
    std::optional<std::string> with_semantics;
    std::optional<std::string> hints;
  };

  /// Throws AllVariable when `c` has no constant attribute.
  std::string prompt_basic(const edtl::AttributeCombination& c, bool include_explain = true);

  /// prompt_basic plus the simplified formula of `c` as a constraint.
  std::string prompt_with_semantics(const edtl::AttributeCombination& c,
                                    const classify::ClassificationReport& report,
                                    bool include_explain = true);

  /// Glosses of the constant attribute values.
  const std::string& prompt_hints();

  PromptBundle make_bundle(const edtl::AttributeCombination& c,
                           const classify::ClassificationReport& report,
                           bool include_explain, bool with_semantics, bool hints);

  /// Text of one prompt file: the enabled prompts separated by blank lines.
  std::string bundle_text(const PromptBundle& b);

  using IngestResult = std::variant<cnl::CnlTemplate, std::vector<cnl::Diagnostic>>;

  /// \brief Turns an assistant answer into a template for the class of `c`.
  ///
  /// Takes the first sentence, turns quoted attribute names into slot
  /// markers and validates the result.  A template for a class that
  /// already has a renderable one, or for a combination with constant
  /// reaction, is kept as non-renderable.
  IngestResult ingest_response(const edtl::AttributeCombination& c, std::string_view text,
                               const cnl::CnlCorpus& corpus,
                               const classify::ClassificationReport& report);
}
