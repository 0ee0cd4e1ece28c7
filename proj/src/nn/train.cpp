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

#include "wdqa/nn/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>

#include "wdqa/metrics/metrics.hpp"
#include "wdqa/nn/adam.hpp"
#include "wdqa/nn/gradcheck.hpp"
#include "wdqa/nn/schedule.hpp"
#include "wdqa/sparql/parser.hpp"
#include "wdqa/sparql/validate.hpp"

namespace wdqa::nn {

namespace {

struct Prepared {
  const data::QuestionRecord* record;
  EncoderInput input;
  QuestionGraph graph;
  std::vector<int> targets;
};

std::vector<Prepared> PrepareAll(const std::vector<data::QuestionRecord>& records,
                                 const InputVocab& vocab, const LabelMap& labels,
                                 std::ostream* log) {
  std::vector<Prepared> out;
  for (const auto& r : records) {
    try {
      sparql::Query gold = sparql::ParseQuery(r.gold_sparql);
      std::vector<int> targets = QueryToTokens(gold, r);
      auto [input, graph] = BuildInput(r, vocab, labels);
      out.push_back({&r, std::move(input), std::move(graph), std::move(targets)});
    } catch (const std::exception& e) {
      if (log) *log << "skip " << r.id << ": " << e.what() << "\n";
    }
  }
  return out;
}

std::optional<sparql::Query> ParsePrediction(const std::string& text) {
  try {
    sparql::Query q = sparql::ParseQuery(text);
    if (!sparql::Validate(q).empty()) return std::nullopt;
    return q;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

TrainResult Train(Model& model, const std::vector<data::QuestionRecord>& train_records,
                  const std::vector<data::QuestionRecord>& dev_records, const LabelMap& labels,
                  const TrainOptions& options) {
  const ModelConfig& cfg = model.config();
  std::mt19937_64 rng(options.seed);

  std::vector<Prepared> train_set = PrepareAll(train_records, model.vocab(), labels, options.log);
  std::vector<Prepared> dev_set = PrepareAll(dev_records, model.vocab(), labels, options.log);
  if (train_set.empty()) throw data::EmptyCorpusError();

  TrainResult result;
  result.n_train_used = train_set.size();
  result.n_dev_used = dev_set.size();

  Adam adam;
  std::vector<double> dev_losses;
  std::vector<std::size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), 0);

  for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    const double lr =
        LearningRate(epoch, dev_losses, cfg.peak_lr, cfg.warmup_epochs, cfg.lr_decay);
    std::shuffle(order.begin(), order.end(), rng);

    double train_loss_sum = 0.0;
    for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
      const std::size_t end = std::min(order.size(), start + cfg.batch_size);
      std::map<std::string, Mat> grads;
      for (std::size_t k = start; k < end; ++k) {
        const Prepared& ex = train_set[order[k]];
        Tape tape;
        std::map<std::string, int> leaves;
        int loss = model.SequenceLoss(tape, leaves, ex.input, ex.graph, ex.targets,
                                      /*train=*/true, rng);
        const double value = tape.Val(loss)(0, 0);
        if (!std::isfinite(value)) throw DivergenceError(epoch);
        train_loss_sum += value;
        tape.Backward(loss);
        const double w = 1.0 / static_cast<double>(end - start);
        for (const auto& [name, id] : leaves) {
          auto it = grads.find(name);
          if (it == grads.end()) {
            grads.emplace(name, w * tape.Grad(id));
          } else {
            it->second += w * tape.Grad(id);
          }
        }
      }
      adam.Step(model.params(), grads, lr);
    }

    EpochLog log;
    log.epoch = epoch;
    log.lr = lr;
    log.train_loss = train_loss_sum / static_cast<double>(train_set.size());

    const std::vector<Prepared>& eval_set = dev_set.empty() ? train_set : dev_set;
    double dev_loss_sum = 0.0;
    std::size_t exact = 0;
    for (const Prepared& ex : eval_set) {
      dev_loss_sum += LossValue(model, ex.input, ex.graph, ex.targets);
      std::vector<int> decoded = model.GreedyDecode(ex.input, ex.graph);
      auto pred = ParsePrediction(TokensToText(decoded, *ex.record));
      if (pred) {
        try {
          sparql::Query gold = sparql::ParseQuery(ex.record->gold_sparql);
          if (metrics::ExactSetMatch(*pred, gold)) ++exact;
        } catch (const std::exception&) {
        }
      }
    }
    log.dev_loss = dev_loss_sum / static_cast<double>(eval_set.size());
    log.dev_exact = static_cast<double>(exact) / static_cast<double>(eval_set.size());
    if (!std::isfinite(log.dev_loss)) throw DivergenceError(epoch);
    dev_losses.push_back(log.dev_loss);
    result.epochs.push_back(log);

    if (options.log) {
      *options.log << "epoch " << log.epoch << " lr " << log.lr << " train_loss "
                   << log.train_loss << " dev_loss " << log.dev_loss << " dev_exact "
                   << log.dev_exact << "\n";
    }
    if (options.target_exact && log.dev_exact >= *options.target_exact) break;
  }
  return result;
}

std::string PredictText(const Model& model, const data::QuestionRecord& record,
                        const LabelMap& labels) {
  auto [input, graph] = BuildInput(record, model.vocab(), labels);
  std::vector<int> decoded = model.GreedyDecode(input, graph);
  return TokensToText(decoded, record);
}

std::optional<sparql::Query> Predict(const Model& model, const data::QuestionRecord& record,
                                     const LabelMap& labels) {
  return ParsePrediction(PredictText(model, record, labels));
}

}  // namespace wdqa::nn
