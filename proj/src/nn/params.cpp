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

#include "wdqa/nn/params.hpp"

#include <cmath>
#include <random>

#include "wdqa/nn/encoder_input.hpp"
#include "wdqa/nn/output_vocab.hpp"

namespace wdqa::nn {

std::int64_t ParamStore::NumScalars() const {
  std::int64_t total = 0;
  for (const auto& [name, m] : params_) total += m.size();
  return total;
}

ParamStore InitParams(const ModelConfig& config, int input_vocab_size, std::uint64_t seed) {
  config.Check();
  std::mt19937_64 rng(seed);
  ParamStore store;

  auto weight = [&](const std::string& name, int rows, int cols) {
    double r = std::sqrt(6.0 / (rows + cols));
    std::uniform_real_distribution<double> dist(-r, r);
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
    }
    store.Set(name, std::move(m));
  };
  auto zeros = [&](const std::string& name, int rows, int cols) {
    store.Set(name, Mat::Zero(rows, cols));
  };
  auto ones = [&](const std::string& name, int rows, int cols) {
    store.Set(name, Mat::Ones(rows, cols));
  };

  const int d = config.d_x;
  const int d_head = d / config.heads;
  const int d_ff = d;

  weight("embed", input_vocab_size, d);

  for (int l = 0; l < config.n_layers; ++l) {
    const std::string p = "enc" + std::to_string(l);
    weight(p + ".wq", d, d);
    weight(p + ".wk", d, d);
    weight(p + ".wv", d, d);
    // One vector per edge type, shared across heads.
    weight(p + ".edge", kNumEdgeTypes, d_head);
    weight(p + ".ff1", d, d_ff);
    zeros(p + ".ffb1", 1, d_ff);
    weight(p + ".ff2", d_ff, d);
    zeros(p + ".ffb2", 1, d);
    ones(p + ".ln1g", 1, d);
    zeros(p + ".ln1b", 1, d);
    ones(p + ".ln2g", 1, d);
    zeros(p + ".ln2b", 1, d);
  }

  weight("kw", kNumKeywords, config.d_keyword);

  // Per-class previous-token projections feeding the decoder input.
  weight("sk.w", config.d_keyword, d);
  zeros("sk.b", 1, d);
  weight("se.w", config.d_entity, d);
  zeros("se.b", 1, d);
  weight("sr.w", config.d_relation, d);
  zeros("sr.b", 1, d);

  // Decoder attention over [encoder states; keyword table].
  weight("cb.wq", config.d_h, config.d_h);
  weight("cb.wk", d, config.d_h);
  weight("cb.wv", d, d);

  // Per-class output projections of [h_t; c_t].
  weight("ok.w", config.d_h + d, d);
  weight("oe.w", config.d_h + d, d);
  weight("or.w", config.d_h + d, d);

  for (int j = 0; j < config.n_lstm; ++j) {
    const std::string p = "lstm" + std::to_string(j);
    const int in = j == 0 ? d + d : config.d_h;  // [S_t; c_{t-1}] at the bottom
    weight(p + ".wx", in, 4 * config.d_h);
    weight(p + ".wh", config.d_h, 4 * config.d_h);
    zeros(p + ".b", 1, 4 * config.d_h);
    zeros(p + ".h0", 1, config.d_h);
    zeros(p + ".c0", 1, config.d_h);
  }
  zeros("dec.s0", 1, d);
  zeros("dec.c0", 1, d);

  return store;
}

}  // namespace wdqa::nn
