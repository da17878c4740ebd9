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

#include "edcnl/cli.hpp"

#include <filesystem>
#include <functional>

#include <CLI11.hpp>

#include "edcnl/classify.hpp"
#include "edcnl/cnl.hpp"
#include "edcnl/error.hpp"
#include "edcnl/json_io.hpp"
#include "edcnl/lasso.hpp"
#include "edcnl/promptgen.hpp"
#include "edcnl/sup.hpp"

namespace edcnl::cli
{
  namespace fs = std::filesystem;

  namespace
  {
    struct Options
    {
      // semantics / render
      std::string req_file;
      bool simplify = false;
      // classify / equiv
      int prefix = ltl::EquivBounds{}.prefix_max;
      int loop = ltl::EquivBounds{}.loop_max;
      int samples = ltl::EquivBounds{}.random_samples;
      std::uint64_t seed = ltl::EquivBounds{}.seed;
      unsigned threads = 0;
      std::string out_file;
      // cnl
      std::string corpus_file;
      std::string report_file;
      std::string phrase;
      // prompts / ingest
      std::vector<std::string> combs;
      bool all_combs = false;
      bool with_semantics = false;
      bool hints = false;
      bool explain = true;
      std::string out_dir = "prompts";
      std::string response_file;
      // equiv
      std::string f1, f2;
      // sup
      std::string params_file, trace_file;
    };

    ltl::EquivBounds bounds_of(const Options& o)
    {
      if (o.prefix < 0 || o.loop < 1 || o.samples < 0)
        throw Error("bounds need --prefix >= 0, --loop >= 1 and --samples >= 0");
      ltl::EquivBounds b;
      b.prefix_max = o.prefix;
      b.loop_max = o.loop;
      b.random_samples = o.samples;
      b.seed = o.seed;
      return b;
    }

    void add_bounds(CLI::App* app, Options& o)
    {
      app->add_option("--prefix", o.prefix, "Longest exhaustively checked lasso prefix");
      app->add_option("--loop", o.loop, "Longest exhaustively checked lasso loop");
      app->add_option("--samples", o.samples, "Number of random lassos");
      app->add_option("--seed", o.seed, "Seed of the random lasso sampler");
    }

    classify::ClassificationReport load_report(const Options& o, std::ostream& err)
    {
      if (!o.report_file.empty())
        return io::report_from_json(io::read_json_file(o.report_file));
      err << "note: no --report given; classifying with default bounds\n";
      return classify::classify_all({}, o.threads);
    }

    cnl::CnlCorpus load_corpus(const Options& o, const classify::ClassificationReport& report)
    {
      if (!o.corpus_file.empty())
        return io::load_corpus(o.corpus_file);
      return cnl::seed_corpus(report);
    }

    void emit(const Options& o, std::ostream& out, const std::string& payload)
    {
      if (o.out_file.empty())
        out << payload;
      else
        io::write_file(o.out_file, payload);
    }

    int cmd_semantics(const Options& o, std::ostream& out)
    {
      auto r = io::requirement_from_json(io::read_json_file(o.req_file));
      out << ltl::render_ltl(edtl::instantiate(r, o.simplify)) << "\n";
      return Success;
    }

    int cmd_classify(const Options& o, std::ostream& out, std::ostream& err)
    {
      auto report = classify::classify_all(bounds_of(o), o.threads);
      emit(o, out, io::report_to_json(report).dump(2) + "\n");
      if (report.classes.size() == classify::expected_class_count)
        return Success;
      std::size_t merges = 0, distinct = 0, limits = 0;
      for (const auto& d : report.discrepancies)
        switch (d.kind)
          {
          case classify::Discrepancy::Kind::Merge: ++merges; break;
          case classify::Discrepancy::Kind::Distinct: ++distinct; break;
          case classify::Discrepancy::Kind::ResourceLimit: ++limits; break;
          }
      err << "discrepancy: " << report.classes.size() << " classes, expected "
          << classify::expected_class_count << " (" << report.combination_count()
          << " combinations; " << merges << " oracle merges, " << distinct
          << " distinguishing witnesses, " << limits << " resource limits)\n";
      for (const auto& n : report.notes)
        err << "note: " << n << "\n";
      return Discrepancy;
    }

    int cmd_render(const Options& o, std::ostream& out, std::ostream& err)
    {
      auto r = io::requirement_from_json(io::read_json_file(o.req_file));
      auto report = load_report(o, err);
      auto corpus = load_corpus(o, report);
      out << cnl::render_requirement(r, corpus, report) << "\n";
      return Success;
    }

    int cmd_parse(const Options& o, std::ostream& out, std::ostream& err)
    {
      auto report = load_report(o, err);
      auto corpus = load_corpus(o, report);
      cnl::ParsedPhrase parsed;
      try
        {
          parsed = cnl::parse_requirement(o.phrase, corpus, report);
        }
      catch (const SyntaxError&)
        {
          throw;
        }
      catch (const Error& e)
        {
          err << "error: " << e.what() << "\n";
          return Diagnostics;
        }
      out << io::requirement_to_json(parsed.requirement).dump(2) << "\n";
      err << "class " << parsed.class_id << ", combination "
          << edtl::combination_of(parsed.requirement).key() << "\n";
      for (const auto& w : parsed.warnings)
        err << "warning: " << w << "\n";
      return parsed.warnings.empty() ? Success : Diagnostics;
    }

    int cmd_prompts(const Options& o, std::ostream& out, std::ostream& err)
    {
      std::vector<edtl::AttributeCombination> combs;
      if (o.all_combs)
        {
          for (const auto& c : edtl::enumerate_combinations())
            if (c != edtl::AttributeCombination{})
              combs.push_back(c);
        }
      for (const auto& k : o.combs)
        combs.push_back(edtl::AttributeCombination::from_key(k));
      if (combs.empty())
        throw Error("give --comb KEY or --all");

      std::optional<classify::ClassificationReport> report;
      if (o.with_semantics)
        report = load_report(o, err);
      std::vector<promptgen::PromptBundle> bundles;
      for (const auto& c : combs)
        bundles.push_back(promptgen::make_bundle(
          c, report ? *report : classify::ClassificationReport{}, o.explain, o.with_semantics, o.hints));
      fs::create_directories(o.out_dir);
      for (const auto& b : bundles)
        {
          fs::path path = fs::path(o.out_dir) / (b.combination.key() + ".txt");
          io::write_file(path, promptgen::bundle_text(b));
          out << path.string() << "\n";
        }
      return Success;
    }

    int cmd_ingest(const Options& o, std::ostream& out, std::ostream& err)
    {
      if (o.combs.size() != 1)
        throw Error("ingest needs exactly one --comb KEY");
      auto c = edtl::AttributeCombination::from_key(o.combs.front());
      auto report = load_report(o, err);
      auto corpus = io::load_corpus(o.corpus_file);
      auto result = promptgen::ingest_response(c, io::read_file(o.response_file), corpus, report);
      if (auto* diags = std::get_if<std::vector<cnl::Diagnostic>>(&result))
        {
          for (const auto& d : *diags)
            {
              err << "diagnostic: " << d.message;
              if (d.position)
                err << " (offset " << *d.position << ")";
              err << "\n";
            }
          return Diagnostics;
        }
      const auto& t = std::get<cnl::CnlTemplate>(result);
      corpus.templates.push_back(t);
      fs::path next = io::corpus_path_for(o.corpus_file, corpus.version + 1);
      io::write_new_file(next, io::corpus_to_jsonl(corpus));
      if (!t.renderable)
        err << "note: template stored as non-renderable: " << t.note << "\n";
      out << next.string() << "\n";
      return Success;
    }

    int cmd_equiv(const Options& o, std::ostream& out)
    {
      auto f = ltl::parse_ltl(o.f1);
      auto g = ltl::parse_ltl(o.f2);
      auto verdict = ltl::check_equiv(f, g, bounds_of(o));
      if (auto* eq = std::get_if<ltl::EquivalentUpToBound>(&verdict))
        {
          out << "equivalent up to prefix " << eq->prefix_bound << ", loop " << eq->loop_bound
              << " (" << eq->enumerated_count << " enumerated, " << eq->sampled_count
              << " sampled)\n";
          return Success;
        }
      const auto& cex = std::get<ltl::Counterexample>(verdict);
      out << "counterexample: " << ltl::render_lasso(cex.trace) << "\n";
      return Diagnostics;
    }

    int cmd_sup_run(const Options& o, std::ostream& out)
    {
      auto params = io::sup_params_from_json(io::read_json_file(o.params_file));
      auto trace = io::trace_from_csv(io::read_file(o.trace_file));
      auto verdict = sup::run_monitor(params, trace);
      out << io::verdict_to_json(verdict).dump(2) << "\n";
      return verdict.pass() ? Success : MonitorFailure;
    }
  }

  int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
  {
    Options o;
    CLI::App app{"Event-driven requirement patterns: semantics, classification, CNL and SUP monitoring",
                 "edcnl"};
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "Worker threads for classification (0 = all cores)");

    auto* semantics = app.add_subcommand("semantics", "Print the LTL semantics of a requirement");
    semantics->add_option("requirement", o.req_file, "Requirement JSON file")->required();
    semantics->add_flag("--simplify", o.simplify, "Partially evaluate constant attributes");

    auto* classify_cmd = app.add_subcommand("classify", "Partition the 729 attribute combinations");
    add_bounds(classify_cmd, o);
    classify_cmd->add_option("--out", o.out_file, "Write the report here instead of stdout");

    auto* render = app.add_subcommand("render", "Render a requirement as a CNL phrase");
    render->add_option("requirement", o.req_file, "Requirement JSON file")->required();
    render->add_option("--corpus", o.corpus_file, "Corpus JSONL file (default: seed corpus)");
    render->add_option("--report", o.report_file, "Classification report JSON");

    auto* parse = app.add_subcommand("parse", "Parse a CNL phrase into a requirement");
    parse->add_option("phrase", o.phrase, "The phrase")->required();
    parse->add_option("--corpus", o.corpus_file, "Corpus JSONL file (default: seed corpus)");
    parse->add_option("--report", o.report_file, "Classification report JSON");

    auto* prompts = app.add_subcommand("prompts", "Write assistant prompts for combinations");
    prompts->add_option("--comb", o.combs, "Combination key such as vtttvf");
    prompts->add_flag("--all", o.all_combs, "Every combination with a constant attribute");
    prompts->add_flag("--with-semantics", o.with_semantics, "Append the formula prompt");
    prompts->add_flag("--hints", o.hints, "Append the attribute value glosses");
    prompts->add_flag("--explain,!--no-explain", o.explain, "Ask for an explanation");
    prompts->add_option("--out-dir", o.out_dir, "Directory for <key>.txt files");
    prompts->add_option("--report", o.report_file, "Classification report JSON");

    auto* ingest = app.add_subcommand("ingest", "Add an assistant response to the corpus");
    ingest->add_option("--comb", o.combs, "Combination the response answers")->required();
    ingest->add_option("--response", o.response_file, "Response text file")->required();
    ingest->add_option("--corpus", o.corpus_file, "Corpus JSONL file")->required();
    ingest->add_option("--report", o.report_file, "Classification report JSON");

    auto* equiv = app.add_subcommand("equiv", "Bounded equivalence check of two LTL formulas");
    equiv->add_option("f1", o.f1, "First formula")->required();
    equiv->add_option("f2", o.f2, "Second formula")->required();
    add_bounds(equiv, o);

    auto* sup_cmd = app.add_subcommand("sup", "SUP observer");
    sup_cmd->require_subcommand(1);
    auto* sup_run = sup_cmd->add_subcommand("run", "Run the observer over a trace");
    sup_run->add_option("params", o.params_file, "SUP parameters JSON")->required();
    sup_run->add_option("trace", o.trace_file, "Trace CSV")->required();

    auto* grammar = app.add_subcommand("grammar", "Print the CNL grammar");

    auto* seed = app.add_subcommand("seed-corpus", "Print the seed corpus as JSON Lines");
    seed->add_option("--report", o.report_file, "Classification report JSON");
    seed->add_option("--out", o.out_file, "Write the corpus here instead of stdout");

    try
      {
        app.parse(argc, argv);
      }
    catch (const CLI::ParseError& e)
      {
        int code = app.exit(e, out, err);
        return code == 0 ? Success : UsageError;
      }

    try
      {
        if (*semantics)
          return cmd_semantics(o, out);
        if (*classify_cmd)
          return cmd_classify(o, out, err);
        if (*render)
          return cmd_render(o, out, err);
        if (*parse)
          return cmd_parse(o, out, err);
        if (*prompts)
          return cmd_prompts(o, out, err);
        if (*ingest)
          return cmd_ingest(o, out, err);
        if (*equiv)
          return cmd_equiv(o, out);
        if (*sup_run)
          return cmd_sup_run(o, out);
        if (*seed)
          {
            emit(o, out, io::corpus_to_jsonl(cnl::seed_corpus(load_report(o, err))));
            return Success;
          }
        if (*grammar)
          {
            out << cnl::grammar_export();
            return Success;
          }
      }
    catch (const NoTemplate& e)
      {
        err << "error: " << e.what() << "\n";
        return Diagnostics;
      }
    catch (const AmbiguousPhrase& e)
      {
        err << "error: " << e.what() << "\n";
        return Diagnostics;
      }
    catch (const SyntaxError& e)
      {
        err << "syntax error: " << e.what() << "\n";
        return UsageError;
      }
    catch (const Error& e)
      {
        err << "error: " << e.what() << "\n";
        return UsageError;
      }
    catch (const std::exception& e)
      {
        err << "error: " << e.what() << "\n";
        return UsageError;
      }
    return UsageError;
  }
}
