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

#include "edcnl/sup.hpp"

#include <algorithm>

#include "edcnl/error.hpp"

namespace edcnl::sup
{
  namespace
  {
    // d lies in [lo, hi]
    bool within(std::uint64_t d, const TimeBound& lo, const TimeBound& hi)
    {
      return TimeBound::finite(d) >= lo && TimeBound::finite(d) <= hi;
    }

    bool reached(std::uint64_t d, const TimeBound& hi)
    {
      return !hi.is_infinite() && d >= *hi.ticks;
    }

    void require_bound(const PropExpr& e, const Trace& tr)
    {
      for (const auto& name : identifiers(e))
        for (const auto& v : tr)
          if (!v.bools().contains(name) && !v.ints().contains(name))
            throw UnboundIdentifier(name);
    }

    enum class Phase { Idle, Trig, Local, Action };
  }

  std::string to_string(const TimeBound& b)
  {
    return b.is_infinite() ? "inf" : std::to_string(*b.ticks);
  }

  SupParameters default_params(const PropExpr& trigger_expr, const PropExpr& action_expr)
  {
    SupParameters p;
    p.tse = p.tc = p.tee = trigger_expr;
    p.ase = p.ac = p.aee = action_expr;
    p.tec = p.aec = PropExpr::constant(false);
    return p;
  }

  std::vector<std::string> check_params(const SupParameters& p)
  {
    std::vector<std::string> out;
    auto check = [&out](const TimeBound& lo, const TimeBound& hi, const char* what) {
      if (lo > hi)
        out.push_back(std::string(what) + ": minimum " + to_string(lo) + " exceeds maximum "
                      + to_string(hi));
    };
    check(p.tmin, p.tmax, "trigger window");
    check(p.lmin, p.lmax, "local response region");
    check(p.amin, p.amax, "action window");
    return out;
  }

  std::pair<edtl::Tristate, std::optional<PropExpr>> interpret_interval(TimeBound lo, TimeBound hi)
  {
    if (lo > hi)
      throw Error("interval bounds out of order: [" + to_string(lo) + ", " + to_string(hi) + "]");
    bool lo_zero = lo == TimeBound::finite(0);
    if (lo_zero && hi == TimeBound::finite(0))
      return {edtl::Tristate::False, std::nullopt};
    if (lo_zero && hi.is_infinite())
      return {edtl::Tristate::True, std::nullopt};
    auto bound = [](CmpOp op, std::uint64_t n) {
      return PropExpr::compare("t", op, static_cast<std::int64_t>(n));
    };
    PropExpr ge = bound(CmpOp::Ge, *lo.ticks);
    if (hi.is_infinite())
      return {edtl::Tristate::Var, ge};
    return {edtl::Tristate::Var, PropExpr::conj(ge, bound(CmpOp::Le, *hi.ticks))};
  }

  std::string_view to_string(Reason r)
  {
    switch (r)
      {
      case Reason::TeeWindowMissed: return "TEE-window-missed";
      case Reason::TcViolated: return "TC-violated";
      case Reason::TecExit: return "TEC-exit";
      case Reason::AseWindowMissed: return "ASE-window-missed";
      case Reason::AcViolated: return "AC-violated";
      case Reason::AeeWindowMissed: return "AEE-window-missed";
      case Reason::AecAbort: return "AEC-abort";
      case Reason::TraceExhausted: return "trace-exhausted";
      }
    return "";
  }

  std::string_view to_string(CycleOutcome::Kind k)
  {
    switch (k)
      {
      case CycleOutcome::Kind::Success: return "success";
      case CycleOutcome::Kind::Fail: return "fail";
      case CycleOutcome::Kind::Abort: return "abort";
      }
    return "";
  }

  bool SupVerdict::pass() const
  {
    return count(CycleOutcome::Kind::Fail) == 0;
  }

  std::size_t SupVerdict::count(CycleOutcome::Kind k) const
  {
    return static_cast<std::size_t>(std::count_if(
      cycles.begin(), cycles.end(), [k](const CycleOutcome& c) { return c.kind == k; }));
  }

  SupVerdict run_monitor(const SupParameters& p, const Trace& tr)
  {
    if (tr.empty())
      throw Error("trace is empty");
    if (auto problems = check_params(p); !problems.empty())
      throw Error(problems.front());
    for (const auto* e : {&p.tse, &p.tc, &p.tee, &p.tec, &p.ase, &p.ac, &p.aee, &p.aec})
      require_bound(*e, tr);

    SupVerdict verdict;
    Phase phase = Phase::Idle;
    CycleOutcome cur{};
    std::uint64_t t = 0;
    const std::uint64_t n = tr.size();

    auto close = [&](CycleOutcome::Kind kind, std::optional<Reason> reason) {
      cur.kind = kind;
      cur.reason = reason;
      cur.tick = t;
      verdict.cycles.push_back(cur);
      phase = Phase::Idle;
      // A success that consumed time leaves its last tick to the next cycle.
      bool reuse = kind == CycleOutcome::Kind::Success && t > cur.start;
      if (!reuse)
        ++t;
    };

    while (t < n)
      {
        const Valuation& v = tr[t];
        auto holds = [&v](const PropExpr& e) { return eval_prop(e, v); };

        switch (phase)
          {
          case Phase::Idle:
            if (!holds(p.tse))
              {
                ++t;
                continue;
              }
            cur = CycleOutcome{CycleOutcome::Kind::Abort, std::nullopt, t, t,
                               std::nullopt, std::nullopt, std::nullopt};
            phase = Phase::Trig;
            continue;

          case Phase::Trig:
            {
              std::uint64_t d = t - cur.start;
              if (holds(p.tec))
                close(CycleOutcome::Kind::Abort, Reason::TecExit);
              else if (!holds(p.tc))
                close(CycleOutcome::Kind::Fail, Reason::TcViolated);
              else if (holds(p.tee) && within(d, p.tmin, p.tmax))
                {
                  cur.tee = t;
                  phase = Phase::Local;
                }
              else if (reached(d, p.tmax))
                close(CycleOutcome::Kind::Fail, Reason::TeeWindowMissed);
              else
                ++t;
              continue;
            }

          case Phase::Local:
            {
              std::uint64_t d = t - *cur.tee;
              if (holds(p.ase))
                {
                  if (!within(d, p.lmin, TimeBound::infinity()))
                    close(CycleOutcome::Kind::Fail, Reason::AseWindowMissed);
                  else
                    {
                      cur.a0 = t;
                      phase = Phase::Action;
                    }
                }
              else if (reached(d, p.lmax))
                close(CycleOutcome::Kind::Fail, Reason::AseWindowMissed);
              else
                ++t;
              continue;
            }

          case Phase::Action:
            {
              std::uint64_t d = t - *cur.a0;
              if (holds(p.aec))
                close(CycleOutcome::Kind::Abort, Reason::AecAbort);
              else if (holds(p.aee) && within(d, p.amin, p.amax))
                {
                  cur.aee = t;
                  close(CycleOutcome::Kind::Success, std::nullopt);
                }
              else if (d > 0 && !holds(p.ac))
                close(CycleOutcome::Kind::Fail, Reason::AcViolated);
              else if (reached(d, p.amax))
                close(CycleOutcome::Kind::Fail, Reason::AeeWindowMissed);
              else
                ++t;
              continue;
            }
          }
      }

    if (phase != Phase::Idle)
      {
        t = n - 1;
        cur.kind = CycleOutcome::Kind::Abort;
        cur.reason = Reason::TraceExhausted;
        cur.tick = t;
        verdict.cycles.push_back(cur);
      }
    return verdict;
  }
}
