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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace edcnl
{
  /// Base of every error raised by the library.
  class Error : public std::runtime_error
  {
  public:
    using std::runtime_error::runtime_error;
  };

  /// \brief A text input did not match its grammar.
  ///
  /// `position()` is a 0-based byte offset into the parsed text.
  class SyntaxError : public Error
  {
  public:
    SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at column " + std::to_string(position + 1)),
        position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
  };

  class UnboundIdentifier : public Error
  {
  public:
    explicit UnboundIdentifier(const std::string& name)
      : Error("unbound identifier '" + name + "'"), name_(name)
    {
    }

    const std::string& name() const noexcept { return name_; }

  private:
    std::string name_;
  };

  /// The equivalence oracle would have to enumerate more traces than allowed.
  class ResourceLimit : public Error
  {
  public:
    using Error::Error;
  };

  /// A combination has no constant attribute, so no prompt can be built.
  class AllVariable : public Error
  {
  public:
    AllVariable()
      : Error("combination has no constant attribute; the base pattern covers it")
    {
    }
  };

  class NoTemplate : public Error
  {
  public:
    NoTemplate(int class_id, const std::string& detail)
      : Error("no renderable template for class " + std::to_string(class_id)
              + (detail.empty() ? std::string() : ": " + detail)),
        class_id_(class_id)
    {
    }

    int class_id() const noexcept { return class_id_; }

  private:
    int class_id_;
  };

  class AmbiguousPhrase : public Error
  {
  public:
    AmbiguousPhrase(const std::string& what, std::vector<int> candidates)
      : Error(what), candidates_(std::move(candidates))
    {
    }

    /// Class ids of every template the phrase matched.
    const std::vector<int>& candidates() const noexcept { return candidates_; }

  private:
    std::vector<int> candidates_;
  };
}
