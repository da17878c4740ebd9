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

// File formats.  Every reader throws Error with the offending key or line.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "edcnl/classify.hpp"
#include "edcnl/cnl.hpp"
#include "edcnl/lasso.hpp"
#include "edcnl/pattern.hpp"
#include "edcnl/sup.hpp"

namespace edcnl::io
{
  using Json = nlohmann::ordered_json;

  /// `{"trigger": "H and D", ..., "release": false}`; every attribute key
  /// is required, values are expression strings or Booleans.
  edtl::Requirement requirement_from_json(const Json& j);
  Json requirement_to_json(const edtl::Requirement& r);

  Json lasso_to_json(const ltl::LassoTrace& t);
  ltl::LassoTrace lasso_from_json(const Json& j);

  Json report_to_json(const classify::ClassificationReport& report);
  classify::ClassificationReport report_from_json(const Json& j);

  Json template_to_json(const cnl::CnlTemplate& t);
  cnl::CnlTemplate template_from_json(const Json& j);

  /// One template per line; blank lines are skipped.
  std::string corpus_to_jsonl(const cnl::CnlCorpus& corpus);
  cnl::CnlCorpus corpus_from_jsonl(std::string_view text, int version);

  /// Version encoded in a `name.vN.jsonl` file name, else 1.
  int corpus_version_of(const std::filesystem::path& path);
  /// `name.vN.jsonl` for the given version next to `path`.
  std::filesystem::path corpus_path_for(const std::filesystem::path& path, int version);

  cnl::CnlCorpus load_corpus(const std::filesystem::path& path);

  /// \brief Keys tse ... lmax; bounds are integers or "inf".
  ///
  /// Omitted start events are `true`, omitted conditions and end events
  /// repeat their start event, omitted exits are `false` and omitted
  /// bounds are 0.
  sup::SupParameters sup_params_from_json(const Json& j);
  Json sup_params_to_json(const sup::SupParameters& p);
  Json verdict_to_json(const sup::SupVerdict& v);

  /// Header of identifiers, then one row per tick.  Columns holding only
  /// 0/1 are bound both as Booleans and as integers.
  sup::Trace trace_from_csv(std::string_view text);

  std::string read_file(const std::filesystem::path& path);
  Json read_json_file(const std::filesystem::path& path);
  /// Throws Error when the file cannot be written.
  void write_file(const std::filesystem::path& path, std::string_view content);
  /// Fails with Error when `path` already exists.
  void write_new_file(const std::filesystem::path& path, std::string_view content);
}
