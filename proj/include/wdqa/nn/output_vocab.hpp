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

#ifndef WDQA_NN_OUTPUT_VOCAB_H_
#define WDQA_NN_OUTPUT_VOCAB_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "wdqa/data/corpus.hpp"
#include "wdqa/sparql/ast.hpp"

namespace wdqa::nn {

/// Keyword-class output tokens: the query keywords plus the structural
/// tokens needed to emit complete queries (braces, dot, WHERE, variable
/// slots v1..v8, comparators, small integers, end-of-query).
enum Kw : int {
  kKwEoq = 0,
  kKwAsk,
  kKwSelect,
  kKwCount,
  kKwDistinct,
  kKwWhere,
  kKwLBrace,
  kKwRBrace,
  kKwDot,
  kKwFilter,
  kKwContains,
  kKwStrStarts,
  kKwYear,
  kKwLang,
  kKwOrderBy,
  kKwLimit,
  kKwAsc,
  kKwDesc,
  kKwEq,
  kKwLt,
  kKwGt,
  kKwLe,
  kKwGe,
  kKwVar1,           // v1..v8 occupy 8 consecutive ids
  kKwNum0 = kKwVar1 + 8,  // integers 0..10 occupy 11 consecutive ids
  kNumKeywords = kKwNum0 + 11,
};

const std::vector<std::string>& KeywordNames();

/// Output id space for one record: keywords, then its entity candidates,
/// then its relation candidates.
class OutputVocab {
 public:
  enum class TokenClass { kKeyword, kEntity, kRelation };

  OutputVocab(int n_entities, int n_relations)
      : n_entities_(n_entities), n_relations_(n_relations) {}

  int size() const { return kNumKeywords + n_entities_ + n_relations_; }
  int n_entities() const { return n_entities_; }
  int n_relations() const { return n_relations_; }

  TokenClass ClassOf(int id) const;
  int EntityToken(int slot) const { return kNumKeywords + slot; }
  int RelationToken(int slot) const { return kNumKeywords + n_entities_ + slot; }
  int EntitySlot(int id) const { return id - kNumKeywords; }
  int RelationSlot(int id) const { return id - kNumKeywords - n_entities_; }

 private:
  int n_entities_;
  int n_relations_;
};

struct LinearizeError : std::runtime_error {
  explicit LinearizeError(std::string message) : std::runtime_error(std::move(message)) {}
};

/// Token sequence for a gold query, terminated by the end-of-query token.
/// Variables rename to v1.. in first-appearance order; IRIs become pointer
/// slots into the record's candidate lists. Throws LinearizeError for
/// queries outside the emittable language (string/date literals, integers
/// beyond 10, more than 8 variables, IRIs missing from the candidates).
std::vector<int> QueryToTokens(const sparql::Query& q, const data::QuestionRecord& record);

/// Renders tokens back to query text. Total: any sequence produces some
/// string; ill-formed sequences simply fail to parse downstream.
std::string TokensToText(const std::vector<int>& tokens, const data::QuestionRecord& record);

}  // namespace wdqa::nn

#endif  // WDQA_NN_OUTPUT_VOCAB_H_
