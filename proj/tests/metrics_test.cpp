// Copyright 2026 WDQA Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "wdqa/kg/executor.hpp"
#include "wdqa/metrics/metrics.hpp"
#include "wdqa/sparql/parser.hpp"
#include "wdqa/sparql/printer.hpp"

using namespace wdqa;
using namespace wdqa::metrics;
using namespace wdqa::sparql;



TEST_CASE("decomposition ignores component order and variable names") {
  Query a = ParseQuery("SELECT ?x ?y WHERE { ?x wdt:P1 ?y . ?y wdt:P2 wd:Q5 }");
  Query b = ParseQuery("SELECT ?u ?v WHERE { ?v wdt:P2 wd:Q5 . ?u wdt:P1 ?v }");
  CHECK(Decompose(a) == Decompose(b));
  CHECK(ExactSetMatch(a, b));

  Query c = ParseQuery("SELECT ?x ?y WHERE { ?x wdt:P1 ?y . ?y wdt:P3 wd:Q5 }");
  CHECK(!ExactSetMatch(a, c));
}

TEST_CASE("decomposition distinguishes projection order and modifiers") {
  Query ab = ParseQuery("SELECT ?a ?b WHERE { ?a wdt:P1 ?b }");
  Query ba = ParseQuery("SELECT ?b ?a WHERE { ?a wdt:P1 ?b }");
  CHECK(!ExactSetMatch(ab, ba));

  Query plain = ParseQuery("SELECT ?a WHERE { ?a wdt:P1 wd:Q1 }");
  Query dist = ParseQuery("SELECT DISTINCT ?a WHERE { ?a wdt:P1 wd:Q1 }");
  Query lim = ParseQuery("SELECT ?a WHERE { ?a wdt:P1 wd:Q1 } LIMIT 3");
  CHECK(!ExactSetMatch(plain, dist));
  CHECK(!ExactSetMatch(plain, lim));
}

TEST_CASE("symmetric patterns canonicalize identically under variable swap") {
  // First-appearance renaming alone would distinguish these two.
  Query a = ParseQuery("SELECT ?a ?b WHERE { ?a wdt:P1 ?b . ?b wdt:P2 ?a }");
  Query b = ParseQuery("SELECT ?x ?y WHERE { ?y wdt:P2 ?x . ?x wdt:P1 ?y }");
  CHECK(ExactSetMatch(a, b));
}

TEST_CASE("1000 random scrambles never change the decomposition") {
  testgen::Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    Query q = testgen::RandomQuery(rng);
    Query s = testgen::Scramble(q, rng);
    CAPTURE(PrintQuery(q));
    CAPTURE(PrintQuery(s));
    REQUIRE(Decompose(q) == Decompose(s));
    REQUIRE(ExactSetMatch(q, s));
  }
}

TEST_CASE("exact structural match implies answer F1 of 1.0") {
  testgen::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    kg::KnowledgeGraph g = testgen::RandomGraph(rng, 80);
    Query q = testgen::RandomQuery(rng);
    Query s = testgen::Scramble(q, rng);
    REQUIRE(ExactSetMatch(q, s));
    F1Score f1 = AnswerF1(kg::Execute(g, q), kg::Execute(g, s));
    REQUIRE(f1.f1 == doctest::Approx(1.0));
  }
}

TEST_CASE("answer F1 arithmetic") {
  auto rows = [](std::vector<std::string> ids) {
    kg::AnswerSet a;
    a.kind = kg::AnswerSet::Kind::kRows;
    for (const auto& id : ids) a.rows.push_back({kg::GroundTerm(Iri{Prefix::kWd, id})});
    return a;
  };
  F1Score f = AnswerF1(rows({"Q1", "Q2"}), rows({"Q2", "Q3", "Q4"}));
  CHECK(f.precision == doctest::Approx(0.5));
  CHECK(f.recall == doctest::Approx(1.0 / 3));
  CHECK(f.f1 == doctest::Approx(0.4));

  CHECK(AnswerF1(rows({}), rows({})).f1 == doctest::Approx(1.0));
  CHECK(AnswerF1(rows({}), rows({"Q1"})).f1 == doctest::Approx(0.0));

  kg::AnswerSet bt, bf;
  bt.kind = bf.kind = kg::AnswerSet::Kind::kBoolean;
  bt.boolean = true;
  bf.boolean = false;
  CHECK(AnswerF1(bt, bt).f1 == doctest::Approx(1.0));
  CHECK(AnswerF1(bt, bf).f1 == doctest::Approx(0.0));

  kg::AnswerSet c2, c3;
  c2.kind = c3.kind = kg::AnswerSet::Kind::kCount;
  c2.count = 2;
  c3.count = 3;
  CHECK(AnswerF1(c2, c3).f1 == doctest::Approx(0.0));
  CHECK(AnswerF1(c2, c2).f1 == doctest::Approx(1.0));
}

TEST_CASE("corpus scoring aggregates per question type") {
  kg::KnowledgeGraph g = kg::LoadGraph(
      "wd:Q1 wdt:P1 wd:Q10 .\n"
      "wd:Q2 wdt:P1 wd:Q10 .\n");
  std::vector<EvalRecord> records;
  records.push_back({"b1", ParseQuery("ASK WHERE { wd:Q1 wdt:P1 wd:Q10 }"),
                     ParseQuery("ASK WHERE { wd:Q1 wdt:P1 wd:Q10 }")});
  records.push_back({"f1", ParseQuery("SELECT ?x WHERE { ?x wdt:P1 wd:Q10 }"),
                     ParseQuery("SELECT ?x WHERE { ?x wdt:P1 wd:Q11 }")});
  records.push_back({"f2", std::nullopt, ParseQuery("SELECT ?x WHERE { ?x wdt:P1 wd:Q10 }")});

  CorpusScores s = ScoreCorpus(records, g);
  CHECK(s.n == 3);
  CHECK(s.exact_match_rate == doctest::Approx(1.0 / 3));
  CHECK(s.mean_answer_f1 == doctest::Approx(1.0 / 3));
  CHECK(s.per_type.at(data::QuestionType::kBoolean).n == 1);
  CHECK(s.per_type.at(data::QuestionType::kFact).n == 2);
  CHECK(s.per_type.at(data::QuestionType::kBoolean).exact_rate == doctest::Approx(1.0));
}
