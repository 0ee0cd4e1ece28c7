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

#include "wdqa/nn/encoder_input.hpp"

#include "wdqa/sparql/printer.hpp"
#include "wdqa/text.hpp"

namespace wdqa::nn {

using sparql::Iri;
using sparql::Prefix;

InputVocab::InputVocab() {
  Add(kUnk);
  Add(kCls);
  Add(kSep);
}

int InputVocab::Add(const std::string& symbol) {
  auto it = index_.find(symbol);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(symbols_.size());
  symbols_.push_back(symbol);
  index_.emplace(symbol, id);
  return id;
}

int InputVocab::Id(const std::string& symbol) const {
  auto it = index_.find(symbol);
  return it != index_.end() ? it->second : index_.at(kUnk);
}

InputVocab InputVocab::Build(const std::vector<data::QuestionRecord>& records) {
  InputVocab v;
  for (const auto& r : records) {
    for (const auto& ch : text::Characters(r.question_zh)) v.Add(ch);
    for (const auto& e : r.entity_candidates) v.Add(sparql::RenderIri(e));
    for (const auto& rel : r.relation_candidates) v.Add(sparql::RenderIri(rel));
  }
  return v;
}

InputVocab InputVocab::FromSymbols(std::vector<std::string> symbols) {
  InputVocab v;
  v.symbols_.clear();
  v.index_.clear();
  for (auto& s : symbols) v.Add(s);
  return v;
}

namespace {

// Item kind per token, for the edge rule table.
struct TokenInfo {
  Segment segment;
  int item = -1;           // candidate index within its segment
  Prefix prefix = Prefix::kWd;
  bool mentioned = false;  // label occurs in the question text
};

}  // namespace

std::pair<EncoderInput, QuestionGraph> BuildInput(const data::QuestionRecord& record,
                                                  const InputVocab& vocab,
                                                  const LabelMap& labels) {
  if (record.entity_candidates.empty() || record.relation_candidates.empty()) {
    throw EmptyCandidatesError();
  }

  EncoderInput input;
  std::vector<TokenInfo> info;
  auto push = [&](int id, Segment seg) {
    input.token_ids.push_back(id);
    input.segments.push_back(seg);
    info.push_back({seg});
  };

  push(vocab.Id(InputVocab::kCls), Segment::kSeparator);
  for (const auto& ch : text::Characters(record.question_zh)) {
    push(vocab.Id(ch), Segment::kQuestion);
  }
  push(vocab.Id(InputVocab::kSep), Segment::kSeparator);

  auto mentioned = [&](const Iri& iri) {
    auto it = labels.find(sparql::RenderIri(iri));
    return it != labels.end() && !it->second.empty() &&
           text::Contains(record.question_zh, it->second);
  };

  for (std::size_t i = 0; i < record.entity_candidates.size(); ++i) {
    const Iri& e = record.entity_candidates[i];
    input.entity_pos.push_back(input.n());
    push(vocab.Id(sparql::RenderIri(e)), Segment::kEntity);
    info.back().item = static_cast<int>(i);
    info.back().prefix = e.prefix;
    info.back().mentioned = mentioned(e);
    push(vocab.Id(InputVocab::kSep), Segment::kSeparator);
  }
  for (std::size_t i = 0; i < record.relation_candidates.size(); ++i) {
    const Iri& r = record.relation_candidates[i];
    input.relation_pos.push_back(input.n());
    push(vocab.Id(sparql::RenderIri(r)), Segment::kRelation);
    info.back().item = static_cast<int>(i);
    info.back().prefix = r.prefix;
    info.back().mentioned = mentioned(r);
    push(vocab.Id(InputVocab::kSep), Segment::kSeparator);
  }

  const int n = input.n();
  auto edges = std::make_shared<IntMat>(IntMat::Zero(n, n));
  auto set = [&](int i, int j, EdgeType t) {
    (*edges)(i, j) = static_cast<int>(t);
    (*edges)(j, i) = static_cast<int>(t);
  };
  for (int i = 0; i < n; ++i) set(i, i, EdgeType::kSameItem);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const TokenInfo& a = info[i];
      const TokenInfo& b = info[j];
      if (a.segment == Segment::kQuestion && b.segment == Segment::kQuestion) {
        if (j == i + 1) set(i, j, EdgeType::kQuestionAdjacent);
      } else if (a.segment == Segment::kQuestion && b.segment == Segment::kEntity) {
        if (b.mentioned) set(i, j, EdgeType::kQuestionEntityMention);
      } else if (a.segment == Segment::kQuestion && b.segment == Segment::kRelation) {
        if (b.mentioned) set(i, j, EdgeType::kQuestionRelationMention);
      } else if (a.segment == Segment::kEntity && b.segment == Segment::kRelation) {
        set(i, j, b.prefix == Prefix::kWdt ? EdgeType::kWdtWd : EdgeType::kEntityRelationCooccur);
      } else if (a.segment == Segment::kRelation && b.segment == Segment::kRelation) {
        bool one_wdt = (a.prefix == Prefix::kWdt) != (b.prefix == Prefix::kWdt);
        if (one_wdt) set(i, j, EdgeType::kWdtP);
      }
    }
  }
  return {std::move(input), QuestionGraph{std::move(edges)}};
}

}  // namespace wdqa::nn
