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

#ifndef WDQA_NN_MODEL_H_
#define WDQA_NN_MODEL_H_

#include <map>
#include <random>
#include <string>
#include <vector>

#include "wdqa/nn/config.hpp"
#include "wdqa/nn/encoder_input.hpp"
#include "wdqa/nn/output_vocab.hpp"
#include "wdqa/nn/params.hpp"
#include "wdqa/nn/tape.hpp"

namespace wdqa::nn {

/// Graph-aware encoder over the question/candidate sequence plus an LSTM
/// decoder that points into keyword, entity, and relation output classes.
///
/// Encoder layer: multi-head attention whose scores and context both carry a
/// learned per-edge-type term, followed by a position-wise feed-forward
/// block; both sublayers use residual connections and layer norm. No
/// positional encodings — candidate order carries no information.
///
/// Decoder step: the previous output token's class-specific representation
/// and the previous context vector feed an LSTM stack; the top hidden state
/// attends over [encoder states; keyword table]; per-class scores are dot
/// products between class component vectors and a class-specific projection
/// of [hidden; context], concatenated into one softmax.
class Model {
 public:
  Model(ModelConfig config, ParamStore params, InputVocab vocab)
      : config_(std::move(config)), params_(std::move(params)), vocab_(std::move(vocab)) {
    config_.Check();
  }

  const ModelConfig& config() const { return config_; }
  ParamStore& params() { return params_; }
  const ParamStore& params() const { return params_; }
  const InputVocab& vocab() const { return vocab_; }

  /// Runs the encoder on `tape`, registering parameters as leaves in
  /// `leaves` (name -> node id) on first use. Returns the n x d_x output.
  int Encode(Tape& tape, std::map<std::string, int>& leaves, const EncoderInput& input,
             const QuestionGraph& graph, bool train, std::mt19937_64& rng) const;

  /// Teacher-forced mean cross-entropy over `targets` (which must end with
  /// the end-of-query token). Returns a 1x1 loss node.
  int SequenceLoss(Tape& tape, std::map<std::string, int>& leaves, const EncoderInput& input,
                   const QuestionGraph& graph, const std::vector<int>& targets, bool train,
                   std::mt19937_64& rng) const;

  /// Greedy argmax decode; stops at the end-of-query token (which is not
  /// included in the result) or after config.max_decode_len tokens.
  std::vector<int> GreedyDecode(const EncoderInput& input, const QuestionGraph& graph) const;

 private:
  struct DecodeState;

  int Leaf(Tape& tape, std::map<std::string, int>& leaves, const std::string& name) const;
  DecodeState StartDecode(Tape& tape, std::map<std::string, int>& leaves, int enc,
                          const EncoderInput& input) const;
  /// One decoder step conditioned on the previous emitted token (-1 at t=0);
  /// returns a 1 x V logit node and advances the state.
  int DecodeStep(Tape& tape, std::map<std::string, int>& leaves, DecodeState& state, int prev_token,
                 bool train, std::mt19937_64& rng) const;

  ModelConfig config_;
  ParamStore params_;
  InputVocab vocab_;
};

}  // namespace wdqa::nn

#endif  // WDQA_NN_MODEL_H_
