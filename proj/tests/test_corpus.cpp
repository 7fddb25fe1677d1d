// Copyright 2026 The numprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numprobe/corpus.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "numprobe/errors.hpp"

namespace numprobe {
namespace {

const char* kTables = NUMPROBE_SOURCE_DIR "/tests/data/tables.jsonl";
const char* kHyps = NUMPROBE_SOURCE_DIR "/tests/data/hyps.jsonl";
const char* kQa = NUMPROBE_SOURCE_DIR "/tests/data/qa.jsonl";

// Writes content to a throwaway file; removed on destruction.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = (std::filesystem::temp_directory_path() /
            ("numprobe_corpus_" + std::to_string(++counter) + "_" +
             std::to_string(::getpid()) + ".jsonl"))
               .string();
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const UnitCatalog& catalog() {
  static const UnitCatalog c = UnitCatalog::builtin();
  return c;
}

Hypothesis hyp_of(const std::string& text) {
  Hypothesis h;
  h.text = text;
  annotate(h, catalog());
  return h;
}

const Hypothesis& by_id(const Corpus& corpus, const std::string& id) {
  for (const Hypothesis& h : corpus.hypotheses) {
    if (h.id == id) return h;
  }
  FAIL("no hypothesis ", id);
  static Hypothesis dummy;
  return dummy;
}

TEST_CASE("table loading infers orientation and validates shape") {
  std::vector<Table> tables = load_tables(kTables);
  REQUIRE(tables.size() == 3);

  const Table& hulk = tables[0];
  CHECK(hulk.id == "hulk");
  CHECK(hulk.title.value() == "Hulk");
  CHECK(hulk.orientation == Orientation::kEntityInfobox);
  CHECK(hulk.column_count() == 2);
  CHECK(hulk.rows.size() == 5);
  CHECK(hulk.at(1, 1).raw == "June 20, 2003");

  const Table& movies = tables[2];
  CHECK(movies.orientation == Orientation::kRelationalGrid);
  CHECK(movies.column_count() == 3);
  CHECK(movies.headers[2] == "Box office");

  SUBCASE("non-rectangular grid is rejected") {
    TempFile bad(
        R"({"id":"t","headers":["a","b"],"rows":[["1","2"],["3"]]})" "\n");
    CHECK_THROWS_AS(load_tables(bad.path), ParseError);
  }
  SUBCASE("infobox rows must be pairs") {
    TempFile bad(R"({"id":"t","headers":[],"rows":[["a","b","c"]]})" "\n");
    CHECK_THROWS_AS(load_tables(bad.path), ParseError);
  }
  SUBCASE("duplicate table ids are rejected") {
    TempFile bad(
        R"({"id":"t","headers":[],"rows":[["a","b"]]})" "\n"
        R"({"id":"t","headers":[],"rows":[["a","b"]]})" "\n");
    CHECK_THROWS_AS(load_tables(bad.path), ParseError);
  }
  SUBCASE("whole-file JSON array form loads too") {
    TempFile arr(R"([{"id":"t1","headers":[],"rows":[["k","v"]]},)"
                 R"({"id":"t2","headers":["x"],"rows":[["1"]]}])");
    std::vector<Table> t = load_tables(arr.path);
    REQUIRE(t.size() == 2);
    CHECK(t[1].orientation == Orientation::kRelationalGrid);
  }
}

TEST_CASE("tnli loading: identity ingestion, count oracle, error loci") {
  std::vector<Table> tables = load_tables(kTables);
  std::vector<Hypothesis> hyps = load_tnli(kHyps, tables);
  // The fixture holds ten records; ingestion adds or drops nothing.
  REQUIRE(hyps.size() == 10);
  for (const Hypothesis& h : hyps) {
    CHECK((h.label == Label::kEntail || h.label == Label::kContradict));
  }
  CHECK(hyps[0].id == "h1");
  CHECK(hyps[0].text == "Born in 1986, Nadal is age 37 currently.");
  CHECK(hyps[8].arith.has_value());
  CHECK(hyps[8].arith->op == ArithOp::kSubtract);
  CHECK(hyps[8].arith->result.to_string() == "108400000");

  SUBCASE("unknown table reference") {
    TempFile bad(
        R"({"id":"x","table_id":"nope","hypothesis":"y","label":"entail"})" "\n");
    CHECK_THROWS_AS(load_tnli(bad.path, tables), DanglingTableRef);
  }
  SUBCASE("labels outside the binary scheme are rejected") {
    TempFile bad(
        R"({"id":"x","table_id":"hulk","hypothesis":"y","label":"neutral"})" "\n");
    CHECK_THROWS_WITH_AS(load_tnli(bad.path, tables),
                         doctest::Contains(":1:"), ParseError);
  }
  SUBCASE("duplicate hypothesis ids are rejected") {
    TempFile bad(
        R"({"id":"x","table_id":"hulk","hypothesis":"y","label":"entail"})" "\n"
        R"({"id":"x","table_id":"hulk","hypothesis":"z","label":"entail"})" "\n");
    CHECK_THROWS_AS(load_tnli(bad.path, tables), ParseError);
  }
  SUBCASE("derivations that do not reproduce their result are rejected") {
    TempFile bad(
        R"({"id":"x","table_id":"hulk","hypothesis":"y","label":"entail",)"
        R"("derivation":{"operands":[["245.4e6",4,1],["137e6",3,1]],)"
        R"("op":"subtract","result":"120.9e6"}})" "\n");
    CHECK_THROWS_AS(load_tnli(bad.path, tables), ParseError);
  }
}

TEST_CASE("ingestion is lossless under re-serialization") {
  std::vector<Table> tables = load_tables(kTables);
  std::vector<Hypothesis> hyps = load_tnli(kHyps, tables);

  std::ostringstream table_out;
  write_tables(table_out, tables);
  TempFile table_copy(table_out.str());
  std::vector<Table> tables2 = load_tables(table_copy.path);
  REQUIRE(tables2.size() == tables.size());
  for (size_t i = 0; i < tables.size(); ++i) {
    CHECK(tables2[i].id == tables[i].id);
    CHECK(tables2[i].title == tables[i].title);
    CHECK(tables2[i].orientation == tables[i].orientation);
    CHECK(tables2[i].headers == tables[i].headers);
    REQUIRE(tables2[i].rows.size() == tables[i].rows.size());
    for (size_t r = 0; r < tables[i].rows.size(); ++r) {
      for (size_t c = 0; c < tables[i].rows[r].size(); ++c) {
        CHECK(tables2[i].rows[r][c].raw == tables[i].rows[r][c].raw);
      }
    }
  }

  std::ostringstream hyp_out;
  write_tnli(hyp_out, hyps);
  TempFile hyp_copy(hyp_out.str());
  std::vector<Hypothesis> hyps2 = load_tnli(hyp_copy.path, tables);
  REQUIRE(hyps2.size() == hyps.size());
  for (size_t i = 0; i < hyps.size(); ++i) {
    CHECK(hyps2[i].id == hyps[i].id);
    CHECK(hyps2[i].text == hyps[i].text);
    CHECK(hyps2[i].label == hyps[i].label);
  }
}

TEST_CASE("qa recasting: frozen rule traces") {
  RecastTrace trace;

  SUBCASE("who, subject question") {
    CHECK(recast_qa_to_nli("Who directed Hulk?", "Ang Lee", &trace) ==
          "Ang Lee directed Hulk.");
    CHECK(trace.rule == "who");
    // The engine's own trace names the replacement step.
    bool replaced = false;
    for (const auto& s : trace.steps) {
      if (s.find("replaced by answer") != std::string::npos) replaced = true;
    }
    CHECK(replaced);
  }
  SUBCASE("yes-no with be-auxiliary de-inversion") {
    CHECK(recast_qa_to_nli("Was the budget of the movie between $130 and $245.4?",
                           "yes", &trace) ==
          "The budget of the movie was between $130 and $245.4.");
    CHECK(trace.rule == "yes-no");
    bool moved = false;
    for (const auto& s : trace.steps) {
      if (s.find("'was' moved after subject 'the budget of the movie'") !=
          std::string::npos) {
        moved = true;
      }
    }
    CHECK(moved);
  }
  SUBCASE("empty question") {
    CHECK_THROWS_AS(recast_qa_to_nli("", "x"), UnsupportedQuestionForm);
  }
  SUBCASE("remaining templates") {
    CHECK(recast_qa_to_nli("What is the running time of Hulk?", "138 minutes") ==
          "The running time of Hulk is 138 minutes.");
    CHECK(recast_qa_to_nli("When was Hulk released?", "on June 20, 2003") ==
          "Hulk was released on June 20, 2003.");
    CHECK(recast_qa_to_nli("When did Nadal turn pro?", "in 2001") ==
          "Nadal turned pro in 2001.");
    CHECK(recast_qa_to_nli("Which movie was released in 2003?", "Hulk") ==
          "Hulk was released in 2003.");
    CHECK(recast_qa_to_nli("Which movie earned the most at the box office?",
                           "Life of Pi") ==
          "Life of Pi earned the most at the box office.");
    CHECK(recast_qa_to_nli("How many movies did Ang Lee direct?", "5") ==
          "Ang Lee directed 5 movies.");
    CHECK(recast_qa_to_nli("How many minutes is the movie?", "138") ==
          "The movie is 138 minutes.");
    CHECK(recast_qa_to_nli("How much did Hulk gross?", "$245.4 million") ==
          "Hulk grossed $245.4 million.");
    CHECK(recast_qa_to_nli("Did the movie lose money?", "no") ==
          "The movie did not lose money.");
    CHECK(recast_qa_to_nli("Was Nadal born in 1986?", "yes") ==
          "Nadal was born in 1986.");
    CHECK(recast_qa_to_nli("Is Nadal taller than 1.5 meters?", "yes") ==
          "Nadal is taller than 1.5 meters.");
    CHECK(recast_qa_to_nli("Can the movie be watched in about two hours?",
                           "yes") ==
          "The movie can be watched in about two hours.");
  }
  SUBCASE("unsupported forms") {
    CHECK_THROWS_AS(recast_qa_to_nli("Whose movie grossed $245.4 million?",
                                     "Ang Lee"),
                    UnsupportedQuestionForm);
    CHECK_THROWS_AS(recast_qa_to_nli("Hulk profit", "$108.4 million"),
                    UnsupportedQuestionForm);
    // Polar template refuses a non-polar answer.
    CHECK_THROWS_AS(recast_qa_to_nli("Was Hulk released in 2003?", "June"),
                    UnsupportedQuestionForm);
  }
  SUBCASE("every supported recast ends in a period and embeds the answer") {
    const char* questions[] = {
        "Who directed Hulk?",       "What is the height of Rafael Nadal?",
        "When was Hulk released?",  "Which movie was released in 2003?",
        "How many movies did Ang Lee direct?", "How much did Hulk gross?",
        "When did Nadal turn pro?",
    };
    const char* answers[] = {"Ang Lee", "1.85 m",        "on June 20, 2003",
                             "Hulk",    "5",             "$245.4 million",
                             "in 2001"};
    for (size_t i = 0; i < 7; ++i) {
      std::string s = recast_qa_to_nli(questions[i], answers[i]);
      CHECK(s.back() == '.');
      CHECK(s.find(answers[i]) != std::string::npos);
    }
  }
}

TEST_CASE("load_dataset recasts QA corpora and logs skipped forms") {
  std::vector<std::string> skipped;
  Corpus corpus = load_dataset(kQa, kTables, "qa", catalog(), &skipped);
  CHECK(corpus.tables.size() == 3);
  // 21 questions, two unsupported (q19 "Whose...", q20 non-question).
  CHECK(corpus.hypotheses.size() == 19);
  REQUIRE(skipped.size() == 2);
  CHECK(skipped[0].substr(0, 4) == "q19:");
  CHECK(skipped[1].substr(0, 4) == "q20:");
  for (const Hypothesis& h : corpus.hypotheses) {
    CHECK(h.label == Label::kEntail);
    CHECK(h.source == "qa");
    CHECK(h.text.back() == '.');
  }
  const Hypothesis& arith = by_id(corpus, "q21");
  REQUIRE(arith.arith.has_value());
  CHECK(arith.text == "Hulk brought $108.4 million profit.");
  CHECK(value_equal(arith.arith->result, NumericValue::parse("108400000")));

  SUBCASE("unknown format tag") {
    CHECK_THROWS_AS(load_dataset(kQa, kTables, "csv", catalog()), ParseError);
  }
}

TEST_CASE("mention linking matches values across formats and units") {
  Corpus corpus = load_dataset(kHyps, kTables, "tnli", catalog());
  const Table& hulk = corpus.tables[0];
  const Table& nadal = corpus.tables[1];

  SUBCASE("date equality across renderings") {
    const Hypothesis& h6 = by_id(corpus, "h6");
    std::vector<MentionLink> links = link_mentions(h6, hulk, catalog());
    REQUIRE(links.size() == 1);
    CHECK(links[0].row == 1);
    CHECK(links[0].col == 1);
    CHECK_FALSE(links[0].approximate);
    CHECK_FALSE(links[0].year_match);
  }
  SUBCASE("unit conversion plus approximation flag") {
    const Hypothesis& h8 = by_id(corpus, "h8");
    std::vector<MentionLink> links = link_mentions(h8, hulk, catalog());
    REQUIRE(links.size() == 1);
    CHECK(links[0].row == 2);
    CHECK(links[0].approximate);
    CHECK(links[0].unit_from == "hour");
    CHECK(links[0].unit_to == "minute");
  }
  SUBCASE("hypothesis without numbers yields no links") {
    Hypothesis plain = hyp_of("Ang Lee directed the movie.");
    CHECK(link_mentions(plain, hulk, catalog()).empty());
  }
  SUBCASE("bare years link to date cells by year field") {
    const Hypothesis& h1 = by_id(corpus, "h1");
    std::vector<MentionLink> links = link_mentions(h1, nadal, catalog());
    REQUIRE(links.size() == 2);
    CHECK(links[0].year_match);
    CHECK(links[0].row == 1);
    CHECK_FALSE(links[1].year_match);
    CHECK_FALSE(links[1].approximate);
    CHECK(links[1].row == 1);
  }
  SUBCASE("same-unit quantities link exactly without conversion") {
    const Hypothesis& h4 = by_id(corpus, "h4");
    std::vector<MentionLink> links = link_mentions(h4, nadal, catalog());
    REQUIRE(links.size() == 1);
    CHECK(links[0].row == 2);
    CHECK_FALSE(links[0].approximate);
    CHECK(links[0].unit_from.empty());
  }
  SUBCASE("near-miss values become flagged approximate links") {
    const Hypothesis& h5 = by_id(corpus, "h5");
    std::vector<MentionLink> links = link_mentions(h5, nadal, catalog());
    REQUIRE(links.size() == 1);
    CHECK(links[0].approximate);
    CHECK(links[0].row == 3);  // "Turned pro" 2001 vs hypothesis 2000
  }
  SUBCASE("currency and ordinal mentions link exactly") {
    const Hypothesis& h3 = by_id(corpus, "h3");
    std::vector<MentionLink> links = link_mentions(h3, nadal, catalog());
    REQUIRE(links.size() == 2);
    CHECK(links[0].row == 4);
    CHECK_FALSE(links[0].approximate);
    CHECK(links[1].row == 4);  // "3rd" matches the parenthetical ordinal
  }
}

TEST_CASE("numeric column extraction") {
  Corpus corpus = load_dataset(kHyps, kTables, "tnli", catalog());
  const Table& movies = corpus.tables[2];

  SUBCASE("currency column in row order") {
    NumericColumn col = extract_numeric_column(movies, 2);
    REQUIRE(col.values.size() == 5);
    CHECK(col.values[0].to_string() == "213500000");
    CHECK(col.values[1].to_string() == "245400000");
    CHECK(col.values[3].to_string() == "609000000");
    CHECK(col.skipped_rows.empty());
  }
  SUBCASE("all-text column") {
    CHECK_THROWS_AS(extract_numeric_column(movies, 0), NoNumericCells);
  }
  SUBCASE("column index outside the table") {
    CHECK_THROWS_AS(extract_numeric_column(movies, 3), OutOfRange);
  }
  SUBCASE("mixed column: values plus skip records") {
    TempFile mixed(
        R"({"id":"m","headers":["x"],"rows":[["$1"],["n/a"],["2 apples and 3"],["4"],["5.5"]]})"
        "\n");
    std::vector<Table> tables = load_tables(mixed.path);
    annotate(tables[0], catalog());
    NumericColumn col = extract_numeric_column(tables[0], 0);
    // "2 apples and 3" holds two mentions, so it is skipped with "n/a".
    REQUIRE(col.values.size() == 3);
    CHECK(col.value_rows == std::vector<size_t>{0, 3, 4});
    CHECK(col.skipped_rows == std::vector<size_t>{1, 2});
  }
}

TEST_CASE("candidate filtering by reference tokens") {
  Corpus corpus = load_dataset(kHyps, kTables, "tnli", catalog());

  SUBCASE("scale picks measured quantities only") {
    std::vector<Hypothesis> hyps{hyp_of("The player has a height of 1.85 meters."),
                                 hyp_of("The movie was released in 2003.")};
    std::vector<Hypothesis> out =
        filter_candidates(hyps, ReasoningType::kScale);
    REQUIRE(out.size() == 1);
    CHECK(out[0].text == hyps[0].text);
  }
  SUBCASE("empty input stays empty for every type") {
    for (ReasoningType t : all_reasoning_types()) {
      CHECK(filter_candidates({}, t).empty());
    }
  }
  SUBCASE("sorting selects position indicators") {
    std::vector<Hypothesis> hyps{
        hyp_of("Hulk was the one with the second highest box office income."),
        hyp_of("The budget was $137 million.")};
    std::vector<Hypothesis> out =
        filter_candidates(hyps, ReasoningType::kSorting);
    REQUIRE(out.size() == 1);
    CHECK(out[0].text == hyps[0].text);
    // The full fixture variant of the same sentence is selected too.
    bool found = false;
    for (const Hypothesis& h :
         filter_candidates(corpus.hypotheses, ReasoningType::kSorting)) {
      if (h.id == "h10") found = true;
    }
    CHECK(found);
  }
  SUBCASE("numeration wants cardinal mentions") {
    std::vector<Hypothesis> out =
        filter_candidates(corpus.hypotheses, ReasoningType::kNumeration);
    bool has_h1 = false;
    for (const Hypothesis& h : out) has_h1 |= h.id == "h1";
    CHECK(has_h1);
  }
  SUBCASE("heterogeneous wants format-bearing mentions") {
    std::vector<Hypothesis> out =
        filter_candidates(corpus.hypotheses, ReasoningType::kHeterogeneous);
    bool has_h2 = false, has_h1 = false;
    for (const Hypothesis& h : out) {
      has_h2 |= h.id == "h2";
      has_h1 |= h.id == "h1";
    }
    CHECK(has_h2);
    CHECK_FALSE(has_h1);  // bare cardinals carry no special format
  }
  SUBCASE("approximation and arithmetic triggers") {
    std::vector<Hypothesis> appr =
        filter_candidates(corpus.hypotheses, ReasoningType::kApproximation);
    REQUIRE(appr.size() == 1);
    CHECK(appr[0].id == "h8");
    std::vector<Hypothesis> arith =
        filter_candidates(corpus.hypotheses, ReasoningType::kArithmetic);
    bool has_h9 = false;
    for (const Hypothesis& h : arith) has_h9 |= h.id == "h9";
    CHECK(has_h9);
  }
  SUBCASE("partitions are stable under whitespace normalization") {
    Hypothesis spaced = hyp_of("The movie can  be watched in  about two hours.");
    Hypothesis tight = hyp_of("The movie can be watched in about two hours.");
    size_t a = filter_candidates({spaced}, ReasoningType::kApproximation).size();
    size_t b = filter_candidates({tight}, ReasoningType::kApproximation).size();
    CHECK(a == b);
    CHECK(a == 1);
  }
  SUBCASE("resource directory matches the builtin triggers") {
    ReferenceTokens loaded = ReferenceTokens::load_directory(
        NUMPROBE_SOURCE_DIR "/resources/reference-tokens");
    for (ReasoningType t : all_reasoning_types()) {
      CHECK(filter_candidates(corpus.hypotheses, t, loaded).size() ==
            filter_candidates(corpus.hypotheses, t).size());
    }
  }
  SUBCASE("malformed trigger files are rejected") {
    CHECK_THROWS_AS(ReferenceTokens::parse_combined("[nope]\n"), CatalogError);
    CHECK_THROWS_AS(ReferenceTokens::parse_combined("token-before-section\n"),
                    CatalogError);
    CHECK_THROWS_AS(
        ReferenceTokens::parse_combined("[scale]\n@mention bogus-kind\n"),
        CatalogError);
    CHECK_THROWS_AS(ReferenceTokens::load_directory("/nonexistent-dir"),
                    CatalogError);
  }
}

}  // namespace
}  // namespace numprobe
