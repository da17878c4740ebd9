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

// Simplified Universal Pattern: trigger phase, local response region and
// action phase, checked by a discrete-time observer.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edcnl/pattern.hpp"
#include "edcnl/propexpr.hpp"

namespace edcnl::sup
{
  /// Tick count or infinity (empty).
  struct TimeBound
  {
    std::optional<std::uint64_t> ticks;

    static TimeBound infinity() { return {}; }
    static TimeBound finite(std::uint64_t n) { return {n}; }
    bool is_infinite() const { return !ticks.has_value(); }

    friend bool operator==(const TimeBound&, const TimeBound&) = default;
    friend std::strong_ordering operator<=>(const TimeBound& a, const TimeBound& b)
    {
      if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() <=> b.is_infinite();
      return *a.ticks <=> *b.ticks;
    }
  };

  std::string to_string(const TimeBound& b);  // "35" or "inf"

  struct SupParameters
  {
    PropExpr tse, tc, tee, tec;
    TimeBound tmin = TimeBound::finite(0), tmax = TimeBound::finite(0);
    PropExpr ase, ac, aee, aec;
    TimeBound amin = TimeBound::finite(0), amax = TimeBound::finite(0);
    TimeBound lmin = TimeBound::finite(0), lmax = TimeBound::finite(0);
    /// Only the progress interpretation is modelled.
    std::string interpretation = "progress";

    friend bool operator==(const SupParameters&, const SupParameters&) = default;
  };

  /// TSE = TC = TEE = trigger, ASE = AC = AEE = action, exits false, bounds 0.
  SupParameters default_params(const PropExpr& trigger_expr, const PropExpr& action_expr);

  /// Empty when the bounds are ordered, else a description of the problem.
  std::vector<std::string> check_params(const SupParameters& p);

  /// [0,0] is False, [0,inf) is True, anything else constrains `t`.
  std::pair<edtl::Tristate, std::optional<PropExpr>> interpret_interval(TimeBound lo, TimeBound hi);

  enum class Reason
  {
    TeeWindowMissed,
    TcViolated,
    TecExit,
    AseWindowMissed,
    AcViolated,
    AeeWindowMissed,
    AecAbort,
    TraceExhausted,
  };

  std::string_view to_string(Reason r);

  struct CycleOutcome
  {
    enum class Kind { Success, Fail, Abort };
    Kind kind;
    std::optional<Reason> reason;  // empty for Success
    std::uint64_t start;           // t0
    std::uint64_t tick;            // tick of the verdict
    std::optional<std::uint64_t> tee, a0, aee;

    friend bool operator==(const CycleOutcome&, const CycleOutcome&) = default;
  };

  std::string_view to_string(CycleOutcome::Kind k);

  struct SupVerdict
  {
    std::vector<CycleOutcome> cycles;

    bool pass() const;
    std::size_t count(CycleOutcome::Kind k) const;

    friend bool operator==(const SupVerdict&, const SupVerdict&) = default;
  };

  using Trace = std::vector<Valuation>;

  /// \brief Runs the observer over a finite trace.
  ///
  /// Phases advance within a tick when their events coincide.  A
  /// successful cycle that took at least one tick hands its last tick to
  /// the next cycle; failures and aborts resume one tick later.  The
  /// action condition is checked strictly between ASE and AEE.  Throws
  /// UnboundIdentifier when the trace lacks a parameter identifier and
  /// Error on an empty trace or invalid bounds.
  SupVerdict run_monitor(const SupParameters& p, const Trace& tr);
}
