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

#include <map>
#include <random>

#include "bitlasso.hpp"
#include "edcnl/error.hpp"
#include "edcnl/lasso.hpp"

namespace edcnl::ltl
{
  namespace
  {
    constexpr int sample_prefix_max = 6;
    constexpr int sample_loop_max = 6;

    LassoTrace make_trace(const std::vector<std::string>& names,
                          const std::vector<std::uint64_t>& masks, int prefix, int length)
    {
      LassoTrace t;
      for (int i = 0; i < length; ++i)
        {
          Valuation v;
          for (std::size_t a = 0; a < names.size(); ++a)
            v.set_bool(names[a], (masks[a] >> i) & 1ULL);
          (i < prefix ? t.prefix : t.loop).push_back(std::move(v));
        }
      return t;
    }
  }

  std::uint64_t exhaustive_trace_count(std::size_t atoms, const EquivBounds& b)
  {
    std::uint64_t total = 0;
    for (int l = 1; l <= b.loop_max; ++l)
      for (int p = 0; p <= b.prefix_max; ++p)
        {
          std::size_t bits = atoms * static_cast<std::size_t>(p + l);
          if (bits >= 63)
            return UINT64_MAX;
          total += 1ULL << bits;
          if (total >= (1ULL << 62))
            return UINT64_MAX;
        }
    return total;
  }

  EquivVerdict check_equiv(const Formula& f, const Formula& g, const EquivBounds& b)
  {
    if (b.prefix_max < 0 || b.loop_max < 1 || b.random_samples < 0)
      throw Error("invalid oracle bounds");

    std::map<std::string, int> index;
    for (const Formula* h : {&f, &g})
      for (const auto& leaf : atom_leaves(*h))
        index.emplace(render_ltl(leaf), 0);
    std::vector<std::string> names;
    for (auto& [k, i] : index)
      {
        i = static_cast<int>(names.size());
        names.push_back(k);
      }
    const std::size_t n = names.size();

    const std::uint64_t total = exhaustive_trace_count(n, b);
    if (total == UINT64_MAX || total > b.trace_cap)
      throw ResourceLimit("equivalence check over " + std::to_string(n)
                          + " atoms needs more traces than the cap of "
                          + std::to_string(b.trace_cap));

    auto pf = detail::compile(f, index);
    auto pg = detail::compile(g, index);
    std::vector<std::uint64_t> masks(n), sf, sg;

    for (int l = 1; l <= b.loop_max; ++l)
      for (int p = 0; p <= b.prefix_max; ++p)
        {
          const int len = p + l;
          const std::uint64_t width = (1ULL << len) - 1;
          const std::uint64_t count = 1ULL << (n * static_cast<std::size_t>(len));
          for (std::uint64_t c = 0; c < count; ++c)
            {
              for (std::size_t a = 0; a < n; ++a)
                masks[a] = (c >> (a * static_cast<std::size_t>(len))) & width;
              if (detail::run(pf, masks.data(), p, len, sf)
                  != detail::run(pg, masks.data(), p, len, sg))
                return Counterexample{make_trace(names, masks, p, len)};
            }
        }

    std::mt19937_64 rng(b.seed);
    for (int s = 0; s < b.random_samples; ++s)
      {
        int p = static_cast<int>(rng() % (sample_prefix_max + 1));
        int l = 1 + static_cast<int>(rng() % sample_loop_max);
        int len = p + l;
        for (std::size_t a = 0; a < n; ++a)
          masks[a] = rng() & ((1ULL << len) - 1);
        if (detail::run(pf, masks.data(), p, len, sf)
            != detail::run(pg, masks.data(), p, len, sg))
          return Counterexample{make_trace(names, masks, p, len)};
      }

    return EquivalentUpToBound{b.prefix_max, b.loop_max, b.random_samples, total};
  }
}
