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

#include "edcnl/classify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

#include "edcnl/error.hpp"

namespace edcnl::classify
{
  using edtl::Attribute;
  using edtl::AttributeCombination;
  using edtl::Tristate;

  namespace
  {
    using AtomMap = std::map<std::string, std::string>;

    struct Instance
    {
      AttributeCombination combination;
      ltl::Formula formula;  // abbreviation atoms
      AtomMap to_group;      // abbreviation -> a_i of the group formula
      std::size_t group;
    };

    struct Group
    {
      ltl::Formula renamed;
      std::size_t atoms;
      std::vector<std::size_t> instances;
    };

    struct Link
    {
      AtomMap to_root;  // group atom -> root atom
      std::optional<ltl::EquivalentUpToBound> bound;
    };

    struct ClassBuild
    {
      std::size_t root;  // group index
      std::vector<std::size_t> groups;
    };

    struct PairOutcome
    {
      bool merged = false;
      AtomMap bijection;
      std::optional<ltl::EquivalentUpToBound> bound;
      std::optional<ltl::LassoTrace> witness;  // under the identity bijection
      std::size_t tried = 0;
      std::vector<std::string> limit_notes;
    };

    std::vector<std::string> canonical_atoms(std::size_t k)
    {
      std::vector<std::string> out;
      for (std::size_t i = 1; i <= k; ++i)
        out.push_back("a" + std::to_string(i));
      return out;
    }

    // Searches bijections group atoms -> root atoms in lexicographic
    // permutation order, identity first.
    PairOutcome try_merge(const Group& g, const Group& root, const ltl::EquivBounds& bounds)
    {
      PairOutcome out;
      auto atoms = canonical_atoms(g.atoms);
      std::vector<std::size_t> perm(g.atoms);
      std::iota(perm.begin(), perm.end(), 0);
      do
        {
          AtomMap sigma;
          for (std::size_t i = 0; i < perm.size(); ++i)
            sigma.emplace(atoms[i], atoms[perm[i]]);
          ++out.tried;
          try
            {
              auto verdict = ltl::check_equiv(ltl::rename(g.renamed, sigma), root.renamed, bounds);
              if (auto* eq = std::get_if<ltl::EquivalentUpToBound>(&verdict))
                {
                  out.merged = true;
                  out.bijection = std::move(sigma);
                  out.bound = *eq;
                  return out;
                }
              if (out.tried == 1)
                out.witness = std::get<ltl::Counterexample>(verdict).trace;
            }
          catch (const ResourceLimit& e)
            {
              out.limit_notes.push_back(e.what());
            }
        }
      while (std::next_permutation(perm.begin(), perm.end()));
      return out;
    }

    template <typename Fn>
    void parallel_for(std::size_t n, unsigned threads, Fn&& fn)
    {
      if (threads <= 1 || n <= 1)
        {
          for (std::size_t i = 0; i < n; ++i)
            fn(i);
          return;
        }
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t)
        pool.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < n;)
            fn(i);
        });
    }

    // Scan order for representatives, as attribute indices.
    constexpr std::array<Attribute, 6> scan_order = {
      Attribute::Trigger, Attribute::Reaction, Attribute::Release,
      Attribute::Invariant, Attribute::Final, Attribute::Delay,
    };

    std::array<Tristate, 6> scan_key(const AttributeCombination& c)
    {
      std::array<Tristate, 6> k{};
      for (std::size_t i = 0; i < 6; ++i)
        k[i] = c[scan_order[i]];
      return k;
    }

    AtomMap compose(const AtomMap& first, const AtomMap& second)
    {
      AtomMap out;
      for (const auto& [k, v] : first)
        out.emplace(k, second.at(v));
      return out;
    }

    AtomMap inverse(const AtomMap& m)
    {
      AtomMap out;
      for (const auto& [k, v] : m)
        out.emplace(v, k);
      return out;
    }
  }

  const Member& SemanticClass::member(const AttributeCombination& c) const
  {
    for (const auto& m : members)
      if (m.combination == c)
        return m;
    throw Error("combination " + c.key() + " is not a member of class " + std::to_string(id));
  }

  std::size_t ClassificationReport::combination_count() const
  {
    std::size_t n = 0;
    for (const auto& c : classes)
      n += c.members.size();
    return n;
  }

  AttributeCombination representative_of(std::span<const AttributeCombination> members)
  {
    if (members.empty())
      throw Error("representative_of: empty member set");
    return *std::min_element(members.begin(), members.end(),
                             [](const auto& a, const auto& b) {
                               return scan_key(a) < scan_key(b);
                             });
  }

  bool is_tight(const Member& m)
  {
    for (auto a : edtl::all_attributes)
      if (m.combination[a] == Tristate::Var
          && !m.atom_map.contains(std::string(edtl::abbreviation_of(a))))
        return false;
    return true;
  }

  ClassificationReport classify_all(const ltl::EquivBounds& bounds, unsigned threads)
  {
    if (threads == 0)
      threads = std::max(1u, std::thread::hardware_concurrency());

    // Instantiate and group by renamed formula.
    auto combos = edtl::enumerate_combinations();
    std::vector<Instance> inst(combos.size());
    parallel_for(combos.size(), threads, [&](std::size_t i) {
      auto f = edtl::instantiate(edtl::requirement_for(combos[i]), true);
      auto [renamed, map] = ltl::canonical_rename(f);
      inst[i] = Instance{combos[i], std::move(f), std::move(map), 0};
    });

    std::vector<Group> groups;
    std::map<std::string, std::size_t> group_of_key;
    for (std::size_t i = 0; i < inst.size(); ++i)
      {
        auto renamed = ltl::rename(inst[i].formula, inst[i].to_group);
        auto key = ltl::render_ltl(renamed);
        auto [it, fresh] = group_of_key.emplace(key, groups.size());
        if (fresh)
          groups.push_back(Group{renamed, inst[i].to_group.size(), {}});
        groups[it->second].instances.push_back(i);
        inst[i].group = it->second;
      }

    // Merge groups into classes.  Bounded equivalence over a fixed trace set
    // is transitive, so comparing against each class root suffices.
    std::vector<ClassBuild> builds;
    std::vector<Link> links(groups.size());
    struct PendingDistinct
    {
      std::size_t a, b;  // build indices
      PairOutcome outcome;
    };
    std::vector<PendingDistinct> distinct;
    struct PendingMerge
    {
      std::size_t build;
      std::size_t group;
    };
    std::vector<PendingMerge> merges;
    struct PendingLimit
    {
      std::size_t group;
      std::size_t build;
      std::string note;
    };
    std::vector<PendingLimit> limits;

    for (std::size_t gi = 0; gi < groups.size(); ++gi)
      {
        std::vector<std::size_t> candidates;
        for (std::size_t b = 0; b < builds.size(); ++b)
          if (groups[builds[b].root].atoms == groups[gi].atoms)
            candidates.push_back(b);
        std::vector<PairOutcome> outcomes(candidates.size());
        parallel_for(candidates.size(), threads, [&](std::size_t c) {
          outcomes[c] = try_merge(groups[gi], groups[builds[candidates[c]].root], bounds);
        });

        std::optional<std::size_t> target;
        for (std::size_t c = 0; c < candidates.size(); ++c)
          {
            for (auto& note : outcomes[c].limit_notes)
              limits.push_back({gi, candidates[c], std::move(note)});
            if (outcomes[c].merged && !target)
              target = c;
          }
        if (target)
          {
            std::size_t b = candidates[*target];
            builds[b].groups.push_back(gi);
            links[gi] = Link{outcomes[*target].bijection, outcomes[*target].bound};
            merges.push_back({b, gi});
            continue;
          }
        std::size_t nb = builds.size();
        builds.push_back(ClassBuild{gi, {gi}});
        AtomMap identity;
        for (const auto& a : canonical_atoms(groups[gi].atoms))
          identity.emplace(a, a);
        links[gi] = Link{identity, std::nullopt};
        for (std::size_t c = 0; c < candidates.size(); ++c)
          distinct.push_back({candidates[c], nb, std::move(outcomes[c])});
      }

    // Assemble classes.
    ClassificationReport report;
    report.bounds = bounds;
    std::vector<std::size_t> build_of_class;
    for (std::size_t b = 0; b < builds.size(); ++b)
      {
        const auto& build = builds[b];
        const Group& root = groups[build.root];
        SemanticClass cls;
        for (std::size_t gi : build.groups)
          for (std::size_t ii : groups[gi].instances)
            {
              Member m;
              m.combination = inst[ii].combination;
              m.formula = inst[ii].formula;
              m.atom_map = compose(inst[ii].to_group, links[gi].to_root);
              if (gi == build.root)
                m.evidence.kind = Evidence::Kind::Structural;
              else
                {
                  m.evidence.kind = Evidence::Kind::Oracle;
                  m.evidence.against = ltl::render_ltl(root.renamed);
                  m.evidence.bijection = links[gi].to_root;
                  m.evidence.bound = links[gi].bound;
                }
              cls.members.push_back(std::move(m));
            }

        std::vector<AttributeCombination> tight, all;
        for (const auto& m : cls.members)
          {
            all.push_back(m.combination);
            if (is_tight(m))
              tight.push_back(m.combination);
          }
        cls.representative = representative_of(tight.empty() ? all : tight);

        // Re-express atom maps over the representative's canonical atoms.
        std::size_t rep_group = inst[edtl::enumeration_index(cls.representative)].group;
        AtomMap root_to_rep = inverse(links[rep_group].to_root);
        cls.canonical_formula = groups[rep_group].renamed;
        for (auto& m : cls.members)
          m.atom_map = compose(m.atom_map, root_to_rep);

        std::sort(cls.members.begin(), cls.members.end(), [](const Member& a, const Member& b) {
          return edtl::enumeration_index(a.combination) < edtl::enumeration_index(b.combination);
        });
        report.classes.push_back(std::move(cls));
        build_of_class.push_back(b);
      }

    std::vector<std::size_t> order(report.classes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return edtl::enumeration_index(report.classes[a].representative)
        < edtl::enumeration_index(report.classes[b].representative);
    });
    std::vector<int> id_of_build(builds.size());
    std::vector<SemanticClass> sorted;
    for (std::size_t i = 0; i < order.size(); ++i)
      {
        sorted.push_back(std::move(report.classes[order[i]]));
        sorted.back().id = static_cast<int>(i + 1);
        id_of_build[build_of_class[order[i]]] = sorted.back().id;
      }
    report.classes = std::move(sorted);

    auto ids = [&](std::size_t a, std::size_t b) {
      std::vector<int> v{id_of_build[a], id_of_build[b]};
      std::sort(v.begin(), v.end());
      return v;
    };

    for (const auto& m : merges)
      {
        Discrepancy d;
        d.kind = Discrepancy::Kind::Merge;
        d.classes = {id_of_build[m.build]};
        d.note = "group " + ltl::render_ltl(groups[m.group].renamed) + " merged into "
          + ltl::render_ltl(groups[builds[m.build].root].renamed);
        d.bijection = links[m.group].to_root;
        report.discrepancies.push_back(std::move(d));
      }
    for (auto& p : distinct)
      {
        Discrepancy d;
        d.kind = Discrepancy::Kind::Distinct;
        d.classes = ids(p.a, p.b);
        d.bijections_tried = p.outcome.tried;
        d.witness = std::move(p.outcome.witness);
        d.note = "roots " + ltl::render_ltl(groups[builds[p.a].root].renamed) + " and "
          + ltl::render_ltl(groups[builds[p.b].root].renamed) + ": no equivalence under any of "
          + std::to_string(p.outcome.tried) + " atom bijections";
        if (d.witness)
          d.note += "; the witness separates them under the identity";
        report.discrepancies.push_back(std::move(d));
      }
    for (auto& l : limits)
      {
        Discrepancy d;
        d.kind = Discrepancy::Kind::ResourceLimit;
        d.classes = {id_of_build[l.build]};
        d.note = "group " + ltl::render_ltl(groups[l.group].renamed) + ": " + l.note;
        report.discrepancies.push_back(std::move(d));
      }
    std::stable_sort(report.discrepancies.begin(), report.discrepancies.end(),
                     [](const Discrepancy& a, const Discrepancy& b) {
                       if (a.kind != b.kind)
                         return a.kind < b.kind;
                       return a.classes < b.classes;
                     });

    // Summaries of how constant triggers spread over the classes.
    std::size_t var_rep = 0, const_only = 0, false_trig = 0;
    std::set<int> false_trig_classes;
    for (const auto& cls : report.classes)
      {
        var_rep += cls.representative[Attribute::Trigger] == Tristate::Var;
        bool any_var = false;
        for (const auto& m : cls.members)
          {
            any_var = any_var || m.combination[Attribute::Trigger] == Tristate::Var;
            if (m.combination[Attribute::Trigger] == Tristate::False)
              {
                ++false_trig;
                false_trig_classes.insert(cls.id);
              }
          }
        const_only += !any_var;
      }
    report.notes.push_back(std::to_string(var_rep) + " classes have a representative with variable trigger");
    report.notes.push_back(std::to_string(const_only)
                           + " classes contain only trigger=true or trigger=false combinations");
    std::string where;
    for (int id : false_trig_classes)
      where += (where.empty() ? "" : ", ") + std::to_string(id);
    report.notes.push_back("the " + std::to_string(false_trig)
                           + " trigger=false combinations fall in class(es) " + where);
    if (report.classes.size() != static_cast<std::size_t>(expected_class_count))
      report.notes.push_back("class count " + std::to_string(report.classes.size())
                             + " differs from the expected "
                             + std::to_string(expected_class_count));
    return report;
  }

  const SemanticClass& canonical_class(const AttributeCombination& c,
                                       const ClassificationReport& report)
  {
    for (const auto& cls : report.classes)
      for (const auto& m : cls.members)
        if (m.combination == c)
          return cls;
    throw Error("combination " + c.key() + " is not covered by the classification report");
  }
}
