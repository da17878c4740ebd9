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

#include "edcnl/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <regex>
#include <sstream>

#include "edcnl/error.hpp"

namespace edcnl::io
{
  using classify::ClassificationReport;
  using classify::Discrepancy;
  using classify::Evidence;
  using edtl::Attribute;

  namespace
  {
    const Json& field(const Json& j, const char* key)
    {
      if (!j.is_object() || !j.contains(key))
        throw Error(std::string("missing key \"") + key + "\"");
      return j.at(key);
    }

    template <typename T>
    T get(const Json& j, const char* key)
    {
      try
        {
          return field(j, key).get<T>();
        }
      catch (const nlohmann::json::exception&)
        {
          throw Error(std::string("key \"") + key + "\" has the wrong type");
        }
    }

    PropExpr expr_from(const Json& v, const char* key)
    {
      if (v.is_boolean())
        return PropExpr::constant(v.get<bool>());
      if (!v.is_string())
        throw Error(std::string("key \"") + key + "\" must be a string or a Boolean");
      try
        {
          return parse_prop(v.get<std::string>());
        }
      catch (const SyntaxError& e)
        {
          throw Error(std::string("key \"") + key + "\": " + e.what());
        }
    }

    Json expr_to(const PropExpr& e)
    {
      if (e.is_const())
        return e.value();
      return render_prop(e);
    }

    Json string_map(const std::map<std::string, std::string>& m)
    {
      Json j = Json::object();
      for (const auto& [k, v] : m)
        j[k] = v;
      return j;
    }

    std::map<std::string, std::string> string_map_from(const Json& j)
    {
      std::map<std::string, std::string> m;
      for (const auto& [k, v] : j.items())
        m[k] = v.get<std::string>();
      return m;
    }

    Json bound_to(const ltl::EquivalentUpToBound& b)
    {
      return Json{{"prefix_bound", b.prefix_bound},
                  {"loop_bound", b.loop_bound},
                  {"sampled_count", b.sampled_count},
                  {"enumerated_count", b.enumerated_count}};
    }

    ltl::EquivalentUpToBound bound_from(const Json& j)
    {
      return {get<int>(j, "prefix_bound"), get<int>(j, "loop_bound"),
              get<int>(j, "sampled_count"), get<std::uint64_t>(j, "enumerated_count")};
    }

    std::string_view kind_name(Discrepancy::Kind k)
    {
      switch (k)
        {
        case Discrepancy::Kind::Merge: return "merge";
        case Discrepancy::Kind::Distinct: return "distinct";
        case Discrepancy::Kind::ResourceLimit: return "resource_limit";
        }
      return "";
    }

    Discrepancy::Kind kind_named(const std::string& s)
    {
      if (s == "merge")
        return Discrepancy::Kind::Merge;
      if (s == "distinct")
        return Discrepancy::Kind::Distinct;
      if (s == "resource_limit")
        return Discrepancy::Kind::ResourceLimit;
      throw Error("unknown discrepancy kind \"" + s + "\"");
    }

    sup::TimeBound time_from(const Json& v, const char* key)
    {
      if (v.is_string() && v.get<std::string>() == "inf")
        return sup::TimeBound::infinity();
      if (v.is_number_unsigned())
        return sup::TimeBound::finite(v.get<std::uint64_t>());
      throw Error(std::string("key \"") + key + "\" must be a non-negative integer or \"inf\"");
    }

    Json time_to(const sup::TimeBound& b)
    {
      if (b.is_infinite())
        return "inf";
      return *b.ticks;
    }

    std::string trim(std::string s)
    {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    }

    std::vector<std::string> split_csv(const std::string& line)
    {
      std::vector<std::string> out;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ','))
        out.push_back(trim(cell));
      if (!line.empty() && line.back() == ',')
        out.emplace_back();
      return out;
    }
  }

  edtl::Requirement requirement_from_json(const Json& j)
  {
    if (!j.is_object())
      throw Error("requirement must be a JSON object");
    edtl::Requirement r;
    for (auto a : edtl::all_attributes)
      {
        std::string key(edtl::name_of(a));
        r.set(a, expr_from(field(j, key.c_str()), key.c_str()));
      }
    return r;
  }

  Json requirement_to_json(const edtl::Requirement& r)
  {
    Json j = Json::object();
    for (auto a : edtl::all_attributes)
      j[std::string(edtl::name_of(a))] = expr_to(r[a]);
    return j;
  }

  Json lasso_to_json(const ltl::LassoTrace& t)
  {
    auto states = [](const std::vector<Valuation>& vs) {
      Json arr = Json::array();
      for (const auto& v : vs)
        {
          Json o = Json::object();
          for (const auto& [k, b] : v.bools())
            o[k] = b;
          arr.push_back(std::move(o));
        }
      return arr;
    };
    return Json{{"prefix", states(t.prefix)}, {"loop", states(t.loop)}};
  }

  ltl::LassoTrace lasso_from_json(const Json& j)
  {
    auto states = [](const Json& arr) {
      std::vector<Valuation> out;
      for (const auto& o : arr)
        {
          Valuation v;
          for (const auto& [k, b] : o.items())
            v.set_bool(k, b.get<bool>());
          out.push_back(std::move(v));
        }
      return out;
    };
    ltl::LassoTrace t{states(field(j, "prefix")), states(field(j, "loop"))};
    if (t.loop.empty())
      throw Error("lasso loop is empty");
    return t;
  }

  Json report_to_json(const ClassificationReport& report)
  {
    Json j;
    j["bounds"] = Json{{"prefix_max", report.bounds.prefix_max},
                       {"loop_max", report.bounds.loop_max},
                       {"random_samples", report.bounds.random_samples},
                       {"seed", report.bounds.seed},
                       {"trace_cap", report.bounds.trace_cap}};
    j["combination_count"] = report.combination_count();
    j["class_count"] = report.classes.size();
    j["expected_class_count"] = classify::expected_class_count;
    j["notes"] = report.notes;

    Json classes = Json::array();
    for (const auto& c : report.classes)
      {
        Json cj;
        cj["id"] = c.id;
        cj["representative"] = c.representative.key();
        cj["canonical_formula"] = ltl::render_ltl(c.canonical_formula);
        cj["atom_count"] = c.atom_count();
        Json members = Json::array();
        for (const auto& m : c.members)
          {
            Json mj;
            mj["combination"] = m.combination.key();
            mj["formula"] = ltl::render_ltl(m.formula);
            mj["atom_map"] = string_map(m.atom_map);
            Json ev;
            ev["kind"] = m.evidence.kind == Evidence::Kind::Structural ? "structural" : "oracle";
            if (m.evidence.kind == Evidence::Kind::Oracle)
              {
                ev["against"] = m.evidence.against;
                ev["bijection"] = string_map(m.evidence.bijection);
                if (m.evidence.bound)
                  ev["bound"] = bound_to(*m.evidence.bound);
              }
            mj["evidence"] = std::move(ev);
            members.push_back(std::move(mj));
          }
        cj["members"] = std::move(members);
        classes.push_back(std::move(cj));
      }
    j["classes"] = std::move(classes);

    Json discs = Json::array();
    for (const auto& d : report.discrepancies)
      {
        Json dj;
        dj["kind"] = kind_name(d.kind);
        dj["classes"] = d.classes;
        dj["note"] = d.note;
        if (!d.bijection.empty())
          dj["bijection"] = string_map(d.bijection);
        if (d.witness)
          dj["witness"] = lasso_to_json(*d.witness);
        dj["bijections_tried"] = d.bijections_tried;
        discs.push_back(std::move(dj));
      }
    j["discrepancies"] = std::move(discs);
    return j;
  }

  ClassificationReport report_from_json(const Json& j)
  {
    try
      {
        ClassificationReport r;
        const auto& b = field(j, "bounds");
        r.bounds.prefix_max = get<int>(b, "prefix_max");
        r.bounds.loop_max = get<int>(b, "loop_max");
        r.bounds.random_samples = get<int>(b, "random_samples");
        r.bounds.seed = get<std::uint64_t>(b, "seed");
        r.bounds.trace_cap = get<std::uint64_t>(b, "trace_cap");
        r.notes = get<std::vector<std::string>>(j, "notes");

        for (const auto& cj : field(j, "classes"))
          {
            classify::SemanticClass c;
            c.id = get<int>(cj, "id");
            c.representative = edtl::AttributeCombination::from_key(get<std::string>(cj, "representative"));
            c.canonical_formula = ltl::parse_ltl(get<std::string>(cj, "canonical_formula"));
            for (const auto& mj : field(cj, "members"))
              {
                classify::Member m;
                m.combination = edtl::AttributeCombination::from_key(get<std::string>(mj, "combination"));
                m.formula = ltl::parse_ltl(get<std::string>(mj, "formula"));
                m.atom_map = string_map_from(field(mj, "atom_map"));
                const auto& ev = field(mj, "evidence");
                if (get<std::string>(ev, "kind") == "oracle")
                  {
                    m.evidence.kind = Evidence::Kind::Oracle;
                    m.evidence.against = get<std::string>(ev, "against");
                    m.evidence.bijection = string_map_from(field(ev, "bijection"));
                    if (ev.contains("bound"))
                      m.evidence.bound = bound_from(ev.at("bound"));
                  }
                c.members.push_back(std::move(m));
              }
            r.classes.push_back(std::move(c));
          }

        for (const auto& dj : field(j, "discrepancies"))
          {
            Discrepancy d;
            d.kind = kind_named(get<std::string>(dj, "kind"));
            d.classes = get<std::vector<int>>(dj, "classes");
            d.note = get<std::string>(dj, "note");
            if (dj.contains("bijection"))
              d.bijection = string_map_from(dj.at("bijection"));
            if (dj.contains("witness"))
              d.witness = lasso_from_json(dj.at("witness"));
            d.bijections_tried = get<std::size_t>(dj, "bijections_tried");
            r.discrepancies.push_back(std::move(d));
          }
        return r;
      }
    catch (const nlohmann::json::exception& e)
      {
        throw Error(std::string("malformed report: ") + e.what());
      }
  }

  Json template_to_json(const cnl::CnlTemplate& t)
  {
    Json j;
    j["class_id"] = t.class_id;
    j["text"] = t.text;
    j["provenance"] = cnl::to_string(t.provenance);
    j["renderable"] = t.renderable;
    if (t.combination)
      j["combination"] = t.combination->key();
    if (!t.note.empty())
      j["note"] = t.note;
    return j;
  }

  cnl::CnlTemplate template_from_json(const Json& j)
  {
    cnl::CnlTemplate t;
    t.class_id = get<int>(j, "class_id");
    t.text = get<std::string>(j, "text");
    t.provenance = cnl::provenance_named(get<std::string>(j, "provenance"));
    t.renderable = get<bool>(j, "renderable");
    if (j.contains("combination"))
      t.combination = edtl::AttributeCombination::from_key(get<std::string>(j, "combination"));
    if (j.contains("note"))
      t.note = get<std::string>(j, "note");
    return t;
  }

  std::string corpus_to_jsonl(const cnl::CnlCorpus& corpus)
  {
    std::string out;
    for (const auto& t : corpus.templates)
      out += template_to_json(t).dump() + "\n";
    return out;
  }

  cnl::CnlCorpus corpus_from_jsonl(std::string_view text, int version)
  {
    cnl::CnlCorpus corpus;
    corpus.version = version;
    std::istringstream in{std::string(text)};
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno)
      {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
          continue;
        try
          {
            corpus.templates.push_back(template_from_json(Json::parse(line)));
          }
        catch (const std::exception& e)
          {
            throw Error("corpus line " + std::to_string(lineno) + ": " + e.what());
          }
      }
    return corpus;
  }

  int corpus_version_of(const std::filesystem::path& path)
  {
    static const std::regex versioned(R"(.*\.v([0-9]+)\.jsonl)");
    std::smatch m;
    std::string name = path.filename().string();
    if (std::regex_match(name, m, versioned))
      return std::stoi(m[1].str());
    return 1;
  }

  std::filesystem::path corpus_path_for(const std::filesystem::path& path, int version)
  {
    static const std::regex versioned(R"((.*)\.v[0-9]+\.jsonl)");
    std::string name = path.filename().string();
    std::smatch m;
    std::string stem;
    if (std::regex_match(name, m, versioned))
      stem = m[1].str();
    else if (name.size() > 6 && name.ends_with(".jsonl"))
      stem = name.substr(0, name.size() - 6);
    else
      stem = name;
    return path.parent_path() / (stem + ".v" + std::to_string(version) + ".jsonl");
  }

  cnl::CnlCorpus load_corpus(const std::filesystem::path& path)
  {
    return corpus_from_jsonl(read_file(path), corpus_version_of(path));
  }

  sup::SupParameters sup_params_from_json(const Json& j)
  {
    if (!j.is_object())
      throw Error("SUP parameters must be a JSON object");
    static const char* const known[] = {"tse", "tc", "tee", "tec", "tmin", "tmax", "ase",
                                        "ac", "aee", "aec", "amin", "amax", "lmin", "lmax"};
    for (const auto& [k, v] : j.items())
      if (std::find_if(std::begin(known), std::end(known), [&](const char* s) { return k == s; })
          == std::end(known))
        throw Error("unknown key \"" + k + "\"");

    sup::SupParameters p = sup::default_params(PropExpr::constant(true), PropExpr::constant(true));
    auto expr = [&j](const char* key, PropExpr& slot) {
      if (j.contains(key))
        slot = expr_from(j.at(key), key);
    };
    auto bound = [&j](const char* key, sup::TimeBound& slot) {
      if (j.contains(key))
        slot = time_from(j.at(key), key);
    };
    // An omitted condition or end event repeats its start event.
    expr("tse", p.tse);
    p.tc = p.tee = p.tse;
    expr("tc", p.tc);
    expr("tee", p.tee);
    expr("tec", p.tec);
    expr("ase", p.ase);
    p.ac = p.aee = p.ase;
    expr("ac", p.ac);
    expr("aee", p.aee);
    expr("aec", p.aec);
    bound("tmin", p.tmin);
    bound("tmax", p.tmax);
    bound("amin", p.amin);
    bound("amax", p.amax);
    bound("lmin", p.lmin);
    bound("lmax", p.lmax);
    if (auto problems = sup::check_params(p); !problems.empty())
      throw Error(problems.front());
    return p;
  }

  Json sup_params_to_json(const sup::SupParameters& p)
  {
    return Json{{"tse", expr_to(p.tse)},   {"tc", expr_to(p.tc)},     {"tee", expr_to(p.tee)},
                {"tec", expr_to(p.tec)},   {"tmin", time_to(p.tmin)}, {"tmax", time_to(p.tmax)},
                {"ase", expr_to(p.ase)},   {"ac", expr_to(p.ac)},     {"aee", expr_to(p.aee)},
                {"aec", expr_to(p.aec)},   {"amin", time_to(p.amin)}, {"amax", time_to(p.amax)},
                {"lmin", time_to(p.lmin)}, {"lmax", time_to(p.lmax)}};
  }

  Json verdict_to_json(const sup::SupVerdict& v)
  {
    Json cycles = Json::array();
    for (const auto& c : v.cycles)
      {
        Json cj;
        cj["start"] = c.start;
        cj["outcome"] = sup::to_string(c.kind);
        if (c.reason)
          cj["reason"] = sup::to_string(*c.reason);
        cj["tick"] = c.tick;
        if (c.tee)
          cj["tee"] = *c.tee;
        if (c.a0)
          cj["ase"] = *c.a0;
        if (c.aee)
          cj["aee"] = *c.aee;
        cycles.push_back(std::move(cj));
      }
    return Json{{"pass", v.pass()},
                {"success", v.count(sup::CycleOutcome::Kind::Success)},
                {"fail", v.count(sup::CycleOutcome::Kind::Fail)},
                {"abort", v.count(sup::CycleOutcome::Kind::Abort)},
                {"cycles", std::move(cycles)}};
  }

  sup::Trace trace_from_csv(std::string_view text)
  {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> header;
    std::vector<std::vector<std::int64_t>> rows;
    for (int lineno = 1; std::getline(in, line); ++lineno)
      {
        if (trim(line).empty())
          continue;
        auto cells = split_csv(line);
        if (header.empty())
          {
            for (const auto& c : cells)
              if (!is_identifier(c))
                throw Error("trace header: \"" + c + "\" is not an identifier");
            header = std::move(cells);
            continue;
          }
        if (cells.size() != header.size())
          throw Error("trace line " + std::to_string(lineno) + ": expected "
                      + std::to_string(header.size()) + " cells, found "
                      + std::to_string(cells.size()));
        std::vector<std::int64_t> row;
        for (const auto& c : cells)
          {
            std::size_t used = 0;
            std::int64_t v = 0;
            try
              {
                v = std::stoll(c, &used);
              }
            catch (const std::exception&)
              {
                used = 0;
              }
            if (used == 0 || used != c.size())
              throw Error("trace line " + std::to_string(lineno) + ": \"" + c
                          + "\" is not an integer");
            row.push_back(v);
          }
        rows.push_back(std::move(row));
      }
    if (header.empty())
      throw Error("trace has no header");
    if (rows.empty())
      throw Error("trace has no ticks");

    std::vector<bool> boolean(header.size(), true);
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0 && row[i] != 1)
          boolean[i] = false;

    sup::Trace tr;
    for (const auto& row : rows)
      {
        Valuation v;
        for (std::size_t i = 0; i < row.size(); ++i)
          {
            v.set_int(header[i], row[i]);
            if (boolean[i])
              v.set_bool(header[i], row[i] == 1);
          }
        tr.push_back(std::move(v));
      }
    return tr;
  }

  std::string read_file(const std::filesystem::path& path)
  {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw Error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Json read_json_file(const std::filesystem::path& path)
  {
    try
      {
        return Json::parse(read_file(path));
      }
    catch (const nlohmann::json::parse_error& e)
      {
        throw Error(path.string() + ": " + e.what());
      }
  }

  void write_file(const std::filesystem::path& path, std::string_view content)
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(content.data(), static_cast<std::streamsize>(content.size())))
      throw Error("cannot write " + path.string());
  }

  void write_new_file(const std::filesystem::path& path, std::string_view content)
  {
    std::unique_ptr<std::FILE, int (*)(std::FILE*)> f(std::fopen(path.c_str(), "wx"), &std::fclose);
    if (!f)
      throw Error("cannot create " + path.string() + " (it may already exist)");
    if (std::fwrite(content.data(), 1, content.size(), f.get()) != content.size())
      throw Error("cannot write " + path.string());
  }
}
