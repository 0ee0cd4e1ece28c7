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

#include <set>

#include "wdqa/data/corpus.hpp"
#include "wdqa/sparql/parser.hpp"

using namespace wdqa;
using namespace wdqa::data;

namespace {

const char* kCorpus = R"([
  {"id": "r1", "question_zh": "张三的职业是什么", "question_en": "what is the job",
   "sparql": "SELECT ?x WHERE { wd:Q1 wdt:P1 ?x }",
   "entities": ["wd:Q1"], "relations": ["wdt:P1"]},
  {"id": "r2", "question_zh": "是不是科学家",
   "sparql": "ASK WHERE { wd:Q1 wdt:P1 wd:Q2 }",
   "entities": ["wd:Q1", "wd:Q2"], "relations": ["wdt:P1"]},
  {"id": "r3", "question_zh": "有几个孩子",
   "sparql": "SELECT (COUNT(?x) AS ?n) WHERE { wd:Q1 wdt:P2 ?x }",
   "entities": ["wd:Q1"], "relations": ["wdt:P2"]},
  {"id": "bad-query", "question_zh": "坏记录",
   "sparql": "SELECT ?x WHERE { OPTIONAL { ?x wdt:P1 wd:Q2 } }",
   "entities": ["wd:Q2"], "relations": ["wdt:P1"]},
  {"id": "bad-cover", "question_zh": "覆盖缺失",
   "sparql": "SELECT ?x WHERE { wd:Q9 wdt:P1 ?x }",
   "entities": ["wd:Q1"], "relations": ["wdt:P1"]}
])";

}  // namespace

TEST_CASE("corpus loading keeps valid records and diagnoses the rest") {
  std::vector<std::string> diags;
  auto records = LoadCorpus(kCorpus, &diags);
  REQUIRE(records.size() == 3);
  CHECK(records[0].id == "r1");
  CHECK(records[0].question_en == "what is the job");
  CHECK(records[0].entity_candidates.size() == 1);
  CHECK(diags.size() == 2);
  CHECK(diags[0].find("bad-query") != std::string::npos);
  CHECK(diags[1].find("wd:Q9") != std::string::npos);
}

TEST_CASE("corpus schema violations throw") {
  CHECK_THROWS_AS(LoadCorpus(R"([{"id": "x"}])"), SchemaError);
  CHECK_THROWS_AS(
      LoadCorpus(R"([{"id": "x", "question_zh": "q", "sparql": "ASK WHERE { wd:Q1 wdt:P1 wd:Q2 }",
                      "entities": ["wdt:P1"], "relations": ["wdt:P1"]}])"),
      SchemaError);
  CHECK_THROWS_AS(LoadCorpus(R"([
      {"id": "x", "question_zh": "q", "sparql": "ASK WHERE { wd:Q1 wdt:P1 wd:Q2 }",
       "entities": ["wd:Q1", "wd:Q2"], "relations": ["wdt:P1"]},
      {"id": "x", "question_zh": "q", "sparql": "ASK WHERE { wd:Q1 wdt:P1 wd:Q2 }",
       "entities": ["wd:Q1", "wd:Q2"], "relations": ["wdt:P1"]}])"),
                  DuplicateIdError);
}

TEST_CASE("json-lines corpora load identically to arrays") {
  const std::string jsonl =
      R"({"id": "a", "question_zh": "q1", "sparql": "ASK WHERE { wd:Q1 wdt:P1 wd:Q2 }", "entities": ["wd:Q1", "wd:Q2"], "relations": ["wdt:P1"]})"
      "\n"
      R"({"id": "b", "question_zh": "q2", "sparql": "SELECT ?x WHERE { wd:Q1 wdt:P1 ?x }", "entities": ["wd:Q1"], "relations": ["wdt:P1"]})"
      "\n";
  auto records = LoadCorpus(jsonl);
  REQUIRE(records.size() == 2);
  CHECK(records[1].id == "b");
}

TEST_CASE("question type classification follows the precedence rules") {
  auto type_of = [](const std::string& text) {
    return ClassifyQuestionType(sparql::ParseQuery(text));
  };
  CHECK(type_of("ASK WHERE { wd:Q1 wdt:P1 wd:Q2 }") == QuestionType::kBoolean);
  CHECK(type_of("SELECT (COUNT(?x) AS ?n) WHERE { wd:Q1 wdt:P1 ?x }") == QuestionType::kCounting);
  CHECK(type_of("SELECT ?a ?b WHERE { ?a wdt:P1 ?b }") == QuestionType::kDual);
  CHECK(type_of("SELECT ?a WHERE { ?a wdt:P1 ?v } ORDER BY DESC(?v) LIMIT 1") ==
        QuestionType::kMaxMin);
  CHECK(type_of("SELECT ?a WHERE { wd:Q1 p:P6 ?s . ?s ps:P6 ?a . ?s pq:P8 ?q }") ==
        QuestionType::kQualifier);
  CHECK(type_of("SELECT ?a WHERE { ?a wdt:P1 ?d . FILTER(YEAR(?d) > 2000) }") ==
        QuestionType::kDate);
  CHECK(type_of("SELECT DISTINCT ?a WHERE { ?a wdt:P1 wd:Q2 }") == QuestionType::kFactDedup);
  CHECK(type_of("SELECT ?a WHERE { ?a wdt:P1 wd:Q2 }") == QuestionType::kFact);
  // Precedence: counting with ORDER BY is still counting.
  CHECK(type_of("SELECT (COUNT(?x) AS ?n) WHERE { wd:Q1 p:P6 ?s . ?s pq:P8 ?x }") ==
        QuestionType::kCounting);
}

TEST_CASE("corpus statistics count distinct items and keywords") {
  auto records = LoadCorpus(kCorpus);
  CorpusStats s = ComputeStats(records);
  CHECK(s.n_questions == 3);
  // Gold IRIs: entities {Q1, Q2}; relations {wdt:P1, wdt:P2}.
  CHECK(s.n_entities == 2);
  CHECK(s.n_relations == 2);
  // SELECT, ASK, COUNT.
  CHECK(s.n_keywords == 3);
  CHECK(s.avg_question_len > 0);
  CHECK(s.vocab_size > 0);
  CHECK(RenderStats(s).find("n_questions 3") != std::string::npos);

  // A custom segmenter changes only the vocabulary number.
  CorpusStats bigram = ComputeStats(records, [](std::string_view q) {
    return std::vector<std::string>{std::string(q)};
  });
  CHECK(bigram.vocab_size == 3);
  CHECK(bigram.n_entities == s.n_entities);
}

TEST_CASE("splitting is deterministic, exhaustive, and ratio-faithful") {
  std::vector<QuestionRecord> records;
  for (int i = 0; i < 103; ++i) {
    QuestionRecord r;
    r.id = "r" + std::to_string(i);
    r.question_zh = "问题";
    r.gold_sparql = "ASK WHERE { wd:Q1 wdt:P1 wd:Q2 }";
    records.push_back(std::move(r));
  }
  Split a = SplitCorpus(records, {0.8, 0.1, 0.1}, 42);
  Split b = SplitCorpus(records, {0.8, 0.1, 0.1}, 42);
  Split c = SplitCorpus(records, {0.8, 0.1, 0.1}, 43);

  CHECK(a.train.size() + a.dev.size() + a.test.size() == records.size());
  CHECK(std::abs(static_cast<int>(a.train.size()) - 82) <= 1);
  CHECK(std::abs(static_cast<int>(a.dev.size()) - 10) <= 1);

  auto ids = [](const std::vector<QuestionRecord>& part) {
    std::vector<std::string> out;
    for (const auto& r : part) out.push_back(r.id);
    return out;
  };
  CHECK(ids(a.train) == ids(b.train));
  CHECK(ids(a.train) != ids(c.train));

  std::set<std::string> all;
  for (const auto* part : {&a.train, &a.dev, &a.test}) {
    for (const auto& r : *part) all.insert(r.id);
  }
  CHECK(all.size() == records.size());

  CHECK_THROWS_AS(SplitCorpus(records, {0.5, 0.2, 0.2}, 0), BadRatiosError);
  CHECK_THROWS_AS(SplitCorpus({}, {0.8, 0.1, 0.1}, 0), EmptyCorpusError);
}
