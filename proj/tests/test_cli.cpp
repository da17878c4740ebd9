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

#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "edcnl/cli.hpp"
#include "edcnl/json_io.hpp"
#include "edcnl/promptgen.hpp"
#include "shared_report.hpp"

using namespace edcnl;
namespace fs = std::filesystem;

namespace
{
  struct Run
  {
    int code;
    std::string out, err;
  };

  Run run(std::vector<std::string> args)
  {
    args.insert(args.begin(), "edcnl");
    std::vector<const char*> argv;
    for (const auto& a : args)
      argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  struct Scratch
  {
    fs::path dir;
    Scratch()
    {
      std::random_device rd;
      dir = fs::temp_directory_path() / ("edcnl-cli-" + std::to_string(rd()));
      fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string file(const std::string& name, std::string_view content) const
    {
      io::write_file(dir / name, content);
      return (dir / name).string();
    }
  };

  const char* hand_dryer_json = R"({"trigger": "H and D", "release": false, "final": true,
                                "delay": true, "invariant": true, "reaction": "D"})";

  std::string pulses(std::size_t length, std::size_t period)
  {
    std::string s = "inp_1\n";
    for (std::size_t t = 0; t < length; ++t)
      s += (t > 0 && t % period == 0) ? "1\n" : "0\n";
    return s;
  }

  const char* a1_json = R"({"tse": "true", "ase": "true", "ac": "not inp_1", "aee": "inp_1",
                            "amin": 35, "amax": 35})";
  const char* a2_json = R"({"tse": "true", "ase": "true", "ac": "not inp_1", "aee": "inp_1",
                            "amin": 30, "amax": 40})";
}

TEST_SUITE("cli")
{
  TEST_CASE("semantics")
  {
    Scratch s;
    auto t1 = s.file("t1.json", hand_dryer_json);
    auto r = run({"semantics", t1, "--simplify"});
    CHECK(r.code == 0);
    CHECK(r.out == "G ((H & D) -> D)\n");

    auto all = s.file("all.json", R"({"trigger": "trig", "invariant": "inv", "final": "fin",
                                      "delay": "del", "reaction": "rea", "release": "rel"})");
    r = run({"semantics", all});
    CHECK(r.code == 0);
    CHECK(r.out == "G (trig -> ((inv & !fin) W (rel | (fin & ((inv & !del) W (rel | (inv & rea)))))))\n");

    auto broken = s.file("broken.json", R"({"trigger": "a"})");
    r = run({"semantics", broken});
    CHECK(r.code == 1);
    CHECK(r.err.find("invariant") != std::string::npos);
    CHECK(run({"semantics", (s.dir / "none.json").string()}).code == 1);
  }

  TEST_CASE("usage errors")
  {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"classify", "--prefix", "x"}).code == 1);
  }

  TEST_CASE("classify")
  {
    Scratch s;
    auto out = (s.dir / "report.json").string();
    auto r = run({"classify", "--out", out});
    const auto expected = testsupport::default_report().classes.size() == 32 ? 0 : 3;
    CHECK(r.code == expected);
    auto j = io::read_json_file(out);
    std::size_t members = 0;
    for (const auto& c : j["classes"])
      members += c["members"].size();
    CHECK(members == 729);
    if (expected == 3)
      CHECK(r.err.find("32") != std::string::npos);

    auto loose = (s.dir / "loose.json").string();
    r = run({"classify", "--prefix", "1", "--loop", "1", "--out", loose});
    CHECK((r.code == 0 || r.code == 3));
    CHECK(io::read_json_file(loose)["combination_count"] == 729);
  }

  TEST_CASE("render and parse")
  {
    Scratch s;
    auto t1 = s.file("t1.json", hand_dryer_json);
    auto r = run({"render", t1});
    CHECK(r.code == 0);
    CHECK(r.out == "After 'H and D', 'D' occurs now.\n");

    r = run({"parse", "After 'H and D', 'D' occurs now."});
    CHECK(r.code == 0);
    CHECK(io::requirement_from_json(io::Json::parse(r.out))
          == io::requirement_from_json(io::Json::parse(hand_dryer_json)));

    r = run({"parse", "After 'T', 'I' is valid forever."});
    CHECK(r.code == 2);
    CHECK(r.err.find("broader semantics") != std::string::npos);
    CHECK(edtl::combination_of(io::requirement_from_json(io::Json::parse(r.out))).key() == "vvvttf");

    CHECK(run({"parse", "After 'T' 'I' occurs now."}).code == 1);
    CHECK(run({"parse", "'I' is valid forever."}).code == 2);

    auto nt = s.file("nt.json", R"({"trigger": "T", "invariant": "I", "final": "F", "delay": true,
                                     "reaction": true, "release": false})");
    CHECK(run({"render", nt}).code == 2);
  }

  TEST_CASE("render and parse with explicit files")
  {
    Scratch s;
    auto report = (s.dir / "report.json").string();
    run({"classify", "--out", report});
    auto corpus = s.file("corpus.jsonl", io::corpus_to_jsonl(testsupport::seed()));
    auto t1 = s.file("t1.json", hand_dryer_json);
    auto r = run({"render", t1, "--corpus", corpus, "--report", report});
    CHECK(r.code == 0);
    CHECK(r.out == "After 'H and D', 'D' occurs now.\n");
  }

  TEST_CASE("prompts")
  {
    Scratch s;
    auto r = run({"prompts", "--comb", "vtttvf", "--hints", "--out-dir", s.dir.string()});
    CHECK(r.code == 0);
    auto text = io::read_file(s.dir / "vtttvf.txt");
    CHECK(text == promptgen::prompt_basic(edtl::AttributeCombination::from_key("vtttvf")) + "\n\n"
                    + promptgen::prompt_hints() + "\n");

    r = run({"prompts", "--comb", "vtttvf", "--no-explain", "--with-semantics", "--out-dir",
             s.dir.string()});
    CHECK(r.code == 0);
    text = io::read_file(s.dir / "vtttvf.txt");
    CHECK(text.find("Explain") == std::string::npos);
    CHECK(text.find("\"G (trig -> rea)\".") != std::string::npos);

    CHECK(run({"prompts", "--comb", "vvvvvv"}).code == 1);
    CHECK(run({"prompts", "--comb", "vvvvvq"}).code == 1);
  }

  TEST_CASE("ingest writes a new corpus version")
  {
    Scratch s;
    auto corpus = s.file("corpus.jsonl", "");
    auto resp = s.file("resp.txt", "After 'trigger', 'reaction' occurs now.\n");
    auto r = run({"ingest", "--comb", "vtttvf", "--response", resp, "--corpus", corpus});
    CHECK(r.code == 0);
    auto v2 = s.dir / "corpus.v2.jsonl";
    REQUIRE(fs::exists(v2));
    CHECK(io::read_file(corpus).empty());
    CHECK(io::load_corpus(v2).templates.size() == 1);
    CHECK(io::load_corpus(v2).version == 2);

    // The next version already exists now, so a second ingest must not clobber it.
    CHECK(run({"ingest", "--comb", "vtttvf", "--response", resp, "--corpus", corpus}).code == 1);

    auto bad = s.file("bad.txt", "After 'trigger', the condition should be valid until 'rea', "
                                 "which must occur within the specified time limit.");
    r = run({"ingest", "--comb", "vtttvf", "--response", bad, "--corpus", v2.string()});
    CHECK(r.code == 2);
    CHECK_FALSE(fs::exists(s.dir / "corpus.v3.jsonl"));
  }

  TEST_CASE("equiv")
  {
    auto r = run({"equiv", "G (trig -> rea)", "G (trig -> rea)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("equivalent") == 0);
    r = run({"equiv", "G a", "a"});
    CHECK(r.code == 2);
    CHECK(r.out.find("counterexample") == 0);
    CHECK(run({"equiv", "G (", "a"}).code == 1);

    // Base formula with rel=false and inv, fin, del true substituted.
    r = run({"equiv",
             "G (trig -> ((true & !true) W (false | (true & ((true & !true) W (false | (true & rea)))))))",
             "G (trig -> rea)"});
    CHECK(r.code == 0);
  }

  TEST_CASE("sup run")
  {
    Scratch s;
    auto a1 = s.file("a1.json", a1_json);
    auto a2 = s.file("a2.json", a2_json);
    auto p35 = s.file("p35.csv", pulses(300, 35));
    auto p40 = s.file("p40.csv", pulses(300, 40));
    CHECK(run({"sup", "run", a1, p35}).code == 0);
    auto r = run({"sup", "run", a1, p40});
    CHECK(r.code == 4);
    CHECK(r.out.find("AEE-window-missed") != std::string::npos);
    CHECK(run({"sup", "run", a2, p40}).code == 0);
    CHECK(run({"sup", "run", a2, s.file("bad.csv", "inp_1\nmaybe\n")}).code == 1);
  }

  TEST_CASE("seed corpus")
  {
    auto r = run({"seed-corpus"});
    CHECK(r.code == 0);
    CHECK(io::corpus_from_jsonl(r.out, 1).templates == testsupport::seed().templates);
  }

  TEST_CASE("grammar")
  {
    auto r = run({"grammar"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Req := After <trigger>, <body_trig>") != std::string::npos);
  }
}
