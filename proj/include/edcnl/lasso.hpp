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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "edcnl/ltl.hpp"
#include "edcnl/propexpr.hpp"

namespace edcnl::ltl
{
  /// \brief An infinite word stored as a lasso: prefix · loop^ω.
  struct LassoTrace
  {
    std::vector<Valuation> prefix;
    std::vector<Valuation> loop;  // nonempty

    std::size_t length() const { return prefix.size() + loop.size(); }
    const Valuation& at(std::size_t i) const
    {
      return i < prefix.size() ? prefix[i] : loop[i - prefix.size()];
    }

    friend bool operator==(const LassoTrace&, const LassoTrace&) = default;
  };

  /// Truth of `f` at position 0 of the word.  Fixpoints are computed on the
  /// loop, so the answer is exact.  Throws UnboundIdentifier.
  bool eval_lasso(const Formula& f, const LassoTrace& t);

  /// Text form `[a=1 b=0] ; ([a=0 b=1])^w` used by the CLI.
  std::string render_lasso(const LassoTrace& t);

  struct EquivBounds
  {
    int prefix_max = 2;
    int loop_max = 2;
    int random_samples = 10000;
    std::uint64_t seed = 1;
    /// Upper limit on exhaustively enumerated traces.
    std::uint64_t trace_cap = 100'000'000;
  };

  struct EquivalentUpToBound
  {
    int prefix_bound;
    int loop_bound;
    int sampled_count;
    std::uint64_t enumerated_count;
  };

  struct Counterexample
  {
    LassoTrace trace;
  };

  using EquivVerdict = std::variant<EquivalentUpToBound, Counterexample>;

  inline bool is_equivalent(const EquivVerdict& v)
  {
    return std::holds_alternative<EquivalentUpToBound>(v);
  }

  /// \brief Bounded equivalence oracle.
  ///
  /// Enumerates every lasso with |prefix| <= prefix_max and
  /// 1 <= |loop| <= loop_max over all Boolean valuations of the joint atom
  /// set (loop length outermost, then prefix length), then draws
  /// `random_samples` lassos with |prefix| <= 6 and 1 <= |loop| <= 6 from a
  /// generator seeded with `seed`.  The first trace on which the formulas
  /// disagree is returned.  Comparison atoms are opaque propositions.
  /// Throws ResourceLimit when the enumeration exceeds `trace_cap`.
  EquivVerdict check_equiv(const Formula& f, const Formula& g,
                           const EquivBounds& bounds = {});

  /// Number of traces the exhaustive phase visits for `atoms` atoms.
  std::uint64_t exhaustive_trace_count(std::size_t atoms, const EquivBounds& bounds);
}
