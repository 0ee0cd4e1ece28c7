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

#ifndef WDQA_METRICS_METRICS_H_
#define WDQA_METRICS_METRICS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wdqa/data/corpus.hpp"
#include "wdqa/kg/executor.hpp"
#include "wdqa/sparql/ast.hpp"

namespace wdqa::metrics {

/// Order-free decomposition of a query into comparable components: one
/// tuple per triple pattern, filter, modifier, and the query form.
/// Variables carry canonical names v1..vk chosen so the decomposition is
/// identical for any pattern/filter ordering and any variable naming.
struct TripleSet {
  std::set<std::vector<std::string>> components;

  bool operator==(const TripleSet&) const = default;
  std::string Render() const;
};

struct F1Score {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct InvalidQueryError : std::runtime_error {
  explicit InvalidQueryError(std::string message) : std::runtime_error(std::move(message)) {}
};

/// Decomposes a validated query. Throws InvalidQueryError otherwise.
TripleSet Decompose(const sparql::Query& q);

/// True iff the two decompositions are equal as sets.
bool ExactSetMatch(const sparql::Query& pred, const sparql::Query& gold);

/// Set precision/recall/F1 between answer sets. Boolean and Count answers
/// compare as singleton sets; empty vs empty scores 1.
F1Score AnswerF1(const kg::AnswerSet& pred, const kg::AnswerSet& gold);

struct EvalRecord {
  std::string id;
  std::optional<sparql::Query> pred;  // nullopt: prediction failed to parse/validate
  sparql::Query gold;
};

struct TypeScore {
  std::size_t n = 0;
  double mean_f1 = 0.0;
  double exact_rate = 0.0;
};

struct CorpusScores {
  std::size_t n = 0;
  double mean_answer_f1 = 0.0;  // macro average over records
  double exact_match_rate = 0.0;
  std::map<data::QuestionType, TypeScore> per_type;
};

/// Scores a prediction set against gold over one graph. Throws
/// data::EmptyCorpusError on an empty record list.
CorpusScores ScoreCorpus(const std::vector<EvalRecord>& records, const kg::KnowledgeGraph& kg);

/// Line-oriented key-value report.
std::string RenderScores(const CorpusScores& s);

}  // namespace wdqa::metrics

#endif  // WDQA_METRICS_METRICS_H_
