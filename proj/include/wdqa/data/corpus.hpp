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

#ifndef WDQA_DATA_CORPUS_H_
#define WDQA_DATA_CORPUS_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdqa/sparql/ast.hpp"

namespace wdqa::data {

/// One question with its gold query and candidate graph items.
///
/// Corpus file: a JSON array (or one JSON object per line) of records
///   {"id": "...", "question_zh": "...", "question_en": "...",
///    "sparql": "...", "entities": ["wd:Q1", ...],
///    "relations": ["wdt:P1", ...], "template_type": "..."}
/// question_en and template_type are optional.
struct QuestionRecord {
  std::string id;
  std::string question_zh;
  std::optional<std::string> question_en;
  std::string gold_sparql;
  std::vector<sparql::Iri> entity_candidates;    // wd-prefixed
  std::vector<sparql::Iri> relation_candidates;  // wdt/p/ps/pq-prefixed
  std::optional<std::string> template_type;
};

enum class QuestionType { kFact, kFactDedup, kDual, kBoolean, kCounting, kDate, kMaxMin, kQualifier };

const char* QuestionTypeName(QuestionType t);

struct CorpusStats {
  std::size_t n_questions = 0;
  double avg_question_len = 0.0;  // code points of question_zh
  std::size_t vocab_size = 0;
  std::size_t n_entities = 0;     // distinct entity IRIs in gold queries
  std::size_t n_relations = 0;    // distinct property IRIs (prefix included)
  std::size_t n_keywords = 0;     // distinct keywords used, out of 11
};

struct SchemaError : std::runtime_error {
  SchemaError(std::size_t index, std::string message)
      : std::runtime_error("record " + std::to_string(index) + ": " + message), index(index) {}
  std::size_t index;
};

struct DuplicateIdError : std::runtime_error {
  explicit DuplicateIdError(const std::string& id)
      : std::runtime_error("duplicate record id '" + id + "'") {}
};

struct EmptyCorpusError : std::runtime_error {
  EmptyCorpusError() : std::runtime_error("empty corpus") {}
};

struct BadRatiosError : std::runtime_error {
  explicit BadRatiosError(std::string message) : std::runtime_error(std::move(message)) {}
};

/// Parses a corpus file. Records whose gold query fails to parse or
/// validate are skipped; a note per skip goes to `diagnostics`. Throws
/// SchemaError / DuplicateIdError on malformed input.
std::vector<QuestionRecord> LoadCorpus(const std::string& source,
                                       std::vector<std::string>* diagnostics = nullptr);

/// Deterministic rule, first match wins: ASK -> Boolean; COUNT -> Counting;
/// two or more projected variables -> Dual; ORDER BY with LIMIT -> MaxMin;
/// any pq: predicate -> Qualifier; any YEAR filter or date literal -> Date;
/// DISTINCT -> FactDedup; otherwise Fact.
QuestionType ClassifyQuestionType(const sparql::Query& q);

/// Splits question text into vocabulary tokens. Default: runs of ASCII
/// letters/digits are one token, every other code point is its own token.
using Tokenizer = std::function<std::vector<std::string>(std::string_view)>;

CorpusStats ComputeStats(const std::vector<QuestionRecord>& records,
                         const Tokenizer& tokenizer = nullptr);

/// Key-value lines mirroring the stats report format.
std::string RenderStats(const CorpusStats& s);

/// Deterministic three-way partition. Sizes are within one of ratio*n and
/// exactly exhaust the records. Throws BadRatiosError unless the ratios are
/// nonnegative and sum to 1.
struct Split {
  std::vector<QuestionRecord> train, dev, test;
};
Split SplitCorpus(const std::vector<QuestionRecord>& records,
                  const std::array<double, 3>& ratios, std::uint64_t seed);

}  // namespace wdqa::data

#endif  // WDQA_DATA_CORPUS_H_
