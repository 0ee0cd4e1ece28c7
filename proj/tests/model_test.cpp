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

#include <cmath>
#include <cstdio>
#include <map>
#include <random>

#include "reference_model.hpp"
#include "wdqa/metrics/metrics.hpp"
#include "wdqa/nn/checkpoint.hpp"
#include "wdqa/nn/gradcheck.hpp"
#include "wdqa/nn/model.hpp"
#include "wdqa/nn/output_vocab.hpp"
#include "wdqa/nn/train.hpp"
#include "wdqa/sparql/parser.hpp"
#include "wdqa/sparql/printer.hpp"

using namespace wdqa;
using namespace wdqa::nn;

namespace {

ModelConfig SmallConfig() {
  ModelConfig cfg;
  cfg.heads = 2;
  cfg.d_x = cfg.d_z = 8;
  cfg.d_keyword = cfg.d_entity = cfg.d_relation = 8;
  cfg.n_layers = 1;
  cfg.d_h = 12;
  cfg.n_lstm = 2;
  cfg.dropout_attn = 0.0;
  cfg.dropout_lstm = 0.0;
  cfg.max_decode_len = 16;
  return cfg;
}

data::QuestionRecord SmallRecord() {
  data::QuestionRecord r;
  r.id = "t1";
  r.question_zh = "谁是张三";
  r.gold_sparql = "SELECT ?x WHERE { wd:Q1 wdt:P1 ?x }";
  r.entity_candidates = {{sparql::Prefix::kWd, "Q1"}, {sparql::Prefix::kWd, "Q2"}};
  r.relation_candidates = {{sparql::Prefix::kWdt, "P1"}, {sparql::Prefix::kP, "P6"}};
  return r;
}

LabelMap SmallLabels() {
  return {{"wd:Q1", "张三"}, {"wdt:P1", "职业"}};
}

}  // namespace

TEST_CASE("token linearization round-trips the fixture queries") {
  data::QuestionRecord r = SmallRecord();
  r.relation_candidates.push_back({sparql::Prefix::kPs, "P6"});
  r.relation_candidates.push_back({sparql::Prefix::kPq, "P8"});
  for (const std::string text : {
           "SELECT ?x WHERE { wd:Q1 wdt:P1 ?x }",
           "ASK WHERE { wd:Q1 wdt:P1 wd:Q2 }",
           "SELECT (COUNT(?x) AS ?cnt) WHERE { wd:Q1 wdt:P1 ?x }",
           "SELECT (COUNT(DISTINCT ?x) AS ?cnt) WHERE { ?x wdt:P1 wd:Q2 }",
           "SELECT DISTINCT ?x ?y WHERE { ?x wdt:P1 ?y . ?y p:P6 wd:Q2 }",
           "SELECT ?x WHERE { ?x wdt:P1 ?v . FILTER(?v > 3) } ORDER BY DESC(?v) LIMIT 2",
           "SELECT ?x WHERE { wd:Q1 p:P6 ?s . ?s ps:P6 ?x . ?s pq:P8 ?d . FILTER(YEAR(?d) >= 5) }",
       }) {
    CAPTURE(text);
    sparql::Query q = sparql::ParseQuery(text);
    std::vector<int> tokens = QueryToTokens(q, r);
    CHECK(tokens.back() == kKwEoq);
    // Variables come back canonically renamed, so compare structurally.
    sparql::Query back = sparql::ParseQuery(TokensToText(tokens, r));
    REQUIRE(metrics::ExactSetMatch(back, q));
  }
}

TEST_CASE("linearization rejects queries outside the output language") {
  data::QuestionRecord r = SmallRecord();
  auto tokens_of = [&](const std::string& text) {
    return QueryToTokens(sparql::ParseQuery(text), r);
  };
  CHECK_THROWS_AS(tokens_of("SELECT ?x WHERE { ?x wdt:P1 ?n . FILTER(CONTAINS(?n, \"x\")) }"),
                  LinearizeError);
  CHECK_THROWS_AS(tokens_of("SELECT ?x WHERE { ?x wdt:P1 ?v . FILTER(?v > 99) }"), LinearizeError);
  CHECK_THROWS_AS(tokens_of("SELECT ?x WHERE { ?x wdt:P9 wd:Q1 }"), LinearizeError);  // not a candidate
}

TEST_CASE("renderer is total on arbitrary token sequences") {
  data::QuestionRecord r = SmallRecord();
  std::mt19937_64 rng(3);
  const OutputVocab vocab((int)r.entity_candidates.size(), (int)r.relation_candidates.size());
  for (int i = 0; i < 200; ++i) {
    std::vector<int> tokens;
    int len = 1 + (int)(rng() % 20);
    for (int k = 0; k < len; ++k) tokens.push_back((int)(rng() % vocab.size()));
    (void)TokensToText(tokens, r);  // must not throw
  }
}

TEST_CASE("question graph edges follow the rule table") {
  data::QuestionRecord r = SmallRecord();
  InputVocab vocab = InputVocab::Build({r});
  auto [input, graph] = BuildInput(r, vocab, SmallLabels());
  const IntMat& t = *graph.edge_type;
  REQUIRE(input.n() == (int)t.rows());
  // Diagonal: self edges.
  for (int i = 0; i < input.n(); ++i) CHECK(t(i, i) == (int)EdgeType::kSameItem);
  // Adjacent question characters.
  CHECK(t(1, 2) == (int)EdgeType::kQuestionAdjacent);
  CHECK(t(2, 1) == (int)EdgeType::kQuestionAdjacent);
  CHECK(t(1, 3) == (int)EdgeType::kNone);
  // wd:Q1 is labeled 张三 which occurs in the question; wd:Q2 is not.
  const int e1 = input.entity_pos[0], e2 = input.entity_pos[1];
  CHECK(t(3, e1) == (int)EdgeType::kQuestionEntityMention);
  CHECK(t(3, e2) == (int)EdgeType::kNone);
  // wdt relation vs entity, p-prefixed relation vs wdt relation.
  const int r1 = input.relation_pos[0], r2 = input.relation_pos[1];
  CHECK(t(e1, r1) == (int)EdgeType::kWdtWd);
  CHECK(t(e1, r2) == (int)EdgeType::kEntityRelationCooccur);
  CHECK(t(r1, r2) == (int)EdgeType::kWdtP);
}

TEST_CASE("encoder layer matches the straight-line reference") {
  ModelConfig cfg = SmallConfig();
  data::QuestionRecord r = SmallRecord();
  InputVocab vocab = InputVocab::Build({r});
  Model model(cfg, InitParams(cfg, vocab.size(), 17), vocab);
  auto [input, graph] = BuildInput(r, vocab, SmallLabels());

  Tape tape;
  std::map<std::string, int> leaves;
  std::mt19937_64 rng(0);
  int enc = model.Encode(tape, leaves, input, graph, false, rng);

  Mat expected = testref::OracleLayer(model.params(), cfg, testref::Embed(model.params(), input),
                             *graph.edge_type, 0, true);
  REQUIRE((tape.Val(enc) - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("zero edge embeddings reduce to plain self-attention") {
  ModelConfig cfg = SmallConfig();
  data::QuestionRecord r = SmallRecord();
  InputVocab vocab = InputVocab::Build({r});
  ParamStore params = InitParams(cfg, vocab.size(), 21);
  params.Get("enc0.edge").setZero();
  Model model(cfg, params, vocab);
  auto [input, graph] = BuildInput(r, vocab, SmallLabels());

  Tape tape;
  std::map<std::string, int> leaves;
  std::mt19937_64 rng(0);
  int enc = model.Encode(tape, leaves, input, graph, false, rng);

  // Reference computed with the edge terms dropped entirely.
  Mat expected =
      testref::OracleLayer(model.params(), cfg, testref::Embed(model.params(), input), *graph.edge_type, 0, false);
  REQUIRE((tape.Val(enc) - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("sequence loss matches the straight-line decoder reference") {
  ModelConfig cfg = SmallConfig();
  cfg.n_layers = 2;
  data::QuestionRecord r = SmallRecord();
  InputVocab vocab = InputVocab::Build({r});
  Model model(cfg, InitParams(cfg, vocab.size(), 29), vocab);
  auto [input, graph] = BuildInput(r, vocab, SmallLabels());
  std::vector<int> targets = QueryToTokens(sparql::ParseQuery(r.gold_sparql), r);

  const double got = LossValue(model, input, graph, targets);
  const double expected = testref::OracleLoss(model, input, graph, targets);
  REQUIRE(std::abs(got - expected) < 1e-10);
}

TEST_CASE("swapping candidate order permutes encoder rows exactly") {
  ModelConfig cfg = SmallConfig();
  data::QuestionRecord a = SmallRecord();
  data::QuestionRecord b = a;
  std::swap(b.entity_candidates[0], b.entity_candidates[1]);

  InputVocab vocab = InputVocab::Build({a});
  Model model(cfg, InitParams(cfg, vocab.size(), 5), vocab);
  auto [ia, ga] = BuildInput(a, vocab, SmallLabels());
  auto [ib, gb] = BuildInput(b, vocab, SmallLabels());

  Tape ta, tb;
  std::map<std::string, int> la, lb;
  std::mt19937_64 rng(0);
  int ea = model.Encode(ta, la, ia, ga, false, rng);
  int eb = model.Encode(tb, lb, ib, gb, false, rng);

  // Question rows are untouched; entity rows swap with their candidates.
  for (int i = 0; i <= 4; ++i) {
    REQUIRE((ta.Val(ea).row(i) - tb.Val(eb).row(i)).cwiseAbs().maxCoeff() < 1e-12);
  }
  REQUIRE((ta.Val(ea).row(ia.entity_pos[0]) - tb.Val(eb).row(ib.entity_pos[1]))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  REQUIRE((ta.Val(ea).row(ia.entity_pos[1]) - tb.Val(eb).row(ib.entity_pos[0]))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
}

TEST_CASE("model gradients pass the finite-difference check") {
  ModelConfig cfg = SmallConfig();
  data::QuestionRecord r = SmallRecord();
  InputVocab vocab = InputVocab::Build({r});
  REQUIRE(vocab.size() <= 30);
  Model model(cfg, InitParams(cfg, vocab.size(), 13), vocab);
  auto [input, graph] = BuildInput(r, vocab, SmallLabels());
  std::vector<int> targets = QueryToTokens(sparql::ParseQuery(r.gold_sparql), r);

  GradCheckReport report = CheckModelGradients(model, input, graph, targets, 1e-5, 1e-4, 3, 1);
  INFO(report.Render());
  CHECK(report.ok);
  CHECK(report.groups.size() == model.params().all().size());

  // Negative control: a corrupted analytic gradient must be caught.
  auto grads = AnalyticGradients(model, input, graph, targets);
  grads.at("cb.wq").array() += 0.5;
  auto loss = [&](const ParamStore&) { return LossValue(model, input, graph, targets); };
  GradCheckReport bad = CheckGradients(model.params(), loss, grads, 1e-5, 1e-4, 3, 1);
  CHECK(!bad.ok);
}

TEST_CASE("checkpoint round-trip preserves parameters and predictions") {
  ModelConfig cfg = SmallConfig();
  data::QuestionRecord r = SmallRecord();
  InputVocab vocab = InputVocab::Build({r});
  Model model(cfg, InitParams(cfg, vocab.size(), 3), vocab);
  auto [input, graph] = BuildInput(r, vocab, SmallLabels());

  const std::string path = "test_model.ckpt";
  SaveModel(path, model);
  Model back = LoadModel(path);
  std::remove(path.c_str());

  CHECK(back.config().d_x == cfg.d_x);
  CHECK(back.vocab().symbols() == vocab.symbols());
  for (const auto& [name, m] : model.params().all()) {
    REQUIRE(back.params().Get(name) == m);
  }
  CHECK(model.GreedyDecode(input, graph) == back.GreedyDecode(input, graph));

  CHECK_THROWS_AS(LoadModel("does_not_exist.ckpt"), CheckpointError);
}
