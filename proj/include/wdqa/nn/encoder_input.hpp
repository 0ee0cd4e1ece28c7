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

#ifndef WDQA_NN_ENCODER_INPUT_H_
#define WDQA_NN_ENCODER_INPUT_H_

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdqa/data/corpus.hpp"
#include "wdqa/nn/tape.hpp"

namespace wdqa::nn {

enum class Segment { kSeparator, kQuestion, kEntity, kRelation };

/// Edge-type inventory of the question graph. Mention edges require the
/// candidate's label to appear verbatim in the question text.
enum class EdgeType : int {
  kNone = 0,
  kQuestionAdjacent = 1,
  kQuestionEntityMention = 2,
  kQuestionRelationMention = 3,
  kEntityRelationCooccur = 4,
  kWdtWd = 5,
  kWdtP = 6,
  kSameItem = 7,
};
inline constexpr int kNumEdgeTypes = 8;

/// Input symbol table: question characters plus candidate IRI strings.
class InputVocab {
 public:
  static constexpr const char* kCls = "[CLS]";
  static constexpr const char* kSep = "[SEP]";
  static constexpr const char* kUnk = "[UNK]";

  InputVocab();

  int Add(const std::string& symbol);
  /// Falls back to [UNK] for unseen symbols.
  int Id(const std::string& symbol) const;
  int size() const { return static_cast<int>(symbols_.size()); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  static InputVocab Build(const std::vector<data::QuestionRecord>& records);
  static InputVocab FromSymbols(std::vector<std::string> symbols);

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, int> index_;
};

/// The joint token sequence: [CLS], question chars, [SEP], then each entity
/// and relation candidate followed by [SEP].
struct EncoderInput {
  std::vector<int> token_ids;
  std::vector<Segment> segments;
  std::vector<int> entity_pos;    // token index of each entity candidate
  std::vector<int> relation_pos;  // token index of each relation candidate

  int n() const { return static_cast<int>(token_ids.size()); }
};

/// Symmetric n x n matrix of EdgeType values.
struct QuestionGraph {
  std::shared_ptr<const IntMat> edge_type;
};

struct EmptyCandidatesError : std::runtime_error {
  EmptyCandidatesError()
      : std::runtime_error("record must carry at least one entity and one relation candidate") {}
};

/// Labels keyed by rendered IRI (e.g. "wd:Q234691"); used for mention edges.
using LabelMap = std::map<std::string, std::string>;

std::pair<EncoderInput, QuestionGraph> BuildInput(const data::QuestionRecord& record,
                                                  const InputVocab& vocab,
                                                  const LabelMap& labels = {});

}  // namespace wdqa::nn

#endif  // WDQA_NN_ENCODER_INPUT_H_
