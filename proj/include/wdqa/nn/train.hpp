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

#ifndef WDQA_NN_TRAIN_H_
#define WDQA_NN_TRAIN_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wdqa/data/corpus.hpp"
#include "wdqa/nn/model.hpp"

namespace wdqa::nn {

struct DivergenceError : std::runtime_error {
  explicit DivergenceError(int epoch)
      : std::runtime_error("training diverged (non-finite loss) in epoch " + std::to_string(epoch)) {
  }
};

struct TrainOptions {
  std::uint64_t seed = 0;
  /// Stop once the dev exact-match rate reaches this value.
  std::optional<double> target_exact;
  std::ostream* log = nullptr;
};

struct EpochLog {
  int epoch = 0;
  double lr = 0.0;
  double train_loss = 0.0;
  double dev_loss = 0.0;
  double dev_exact = 0.0;
};

struct TrainResult {
  std::vector<EpochLog> epochs;
  std::size_t n_train_used = 0;  // records that linearize into the output language
  std::size_t n_dev_used = 0;
};

/// Mini-batch training with Adam under the warmup-then-decay-on-plateau
/// schedule. Records whose gold query cannot be linearized are skipped with
/// a log note. Throws DivergenceError on a non-finite loss.
TrainResult Train(Model& model, const std::vector<data::QuestionRecord>& train_records,
                  const std::vector<data::QuestionRecord>& dev_records, const LabelMap& labels,
                  const TrainOptions& options);

/// Greedy prediction; nullopt when the decoded sequence does not parse and
/// validate as a query.
std::optional<sparql::Query> Predict(const Model& model, const data::QuestionRecord& record,
                                     const LabelMap& labels);

/// The decoded raw query text, parseable or not.
std::string PredictText(const Model& model, const data::QuestionRecord& record,
                        const LabelMap& labels);

}  // namespace wdqa::nn

#endif  // WDQA_NN_TRAIN_H_
