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

#ifndef WDQA_NN_CONFIG_H_
#define WDQA_NN_CONFIG_H_

#include <stdexcept>
#include <string>

namespace wdqa::nn {

/// Model and training hyperparameters. Defaults follow the reference
/// setup scaled to a learned lookup embedding: 6 relation-aware layers,
/// attention width 256 with 8 heads, 2 LSTM decoder layers of width 512.
struct ModelConfig {
  int heads = 8;           // H
  int d_x = 256;           // model width
  int d_z = 256;           // attention width (score scaling)
  int n_layers = 6;        // encoder depth
  int d_h = 512;           // decoder hidden width
  int n_lstm = 2;          // decoder depth
  double dropout_attn = 0.1;
  double dropout_lstm = 0.2;
  // Component representation widths. Entity/relation vectors are slices of
  // the encoder output and the keyword table must be attendable next to
  // them, so all three are pinned to d_x.
  int d_keyword = 256;
  int d_entity = 256;
  int d_relation = 256;

  int batch_size = 16;
  int max_epochs = 15;
  double peak_lr = 1e-3;
  int warmup_epochs = 2;
  double lr_decay = 0.8;
  int max_decode_len = 64;

  /// Throws std::invalid_argument when shapes are inconsistent.
  void Check() const;

  std::string ToJson() const;
  static ModelConfig FromJson(const std::string& text);
};

}  // namespace wdqa::nn

#endif  // WDQA_NN_CONFIG_H_
