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

#include "wdqa/nn/config.hpp"

#include <json.hpp>

namespace wdqa::nn {

using nlohmann::json;

void ModelConfig::Check() const {
  auto require = [](bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  };
  require(heads > 0 && d_x > 0 && d_z > 0 && n_layers >= 0 && d_h > 0 && n_lstm > 0,
          "all dimensions must be positive");
  require(d_x % heads == 0, "d_x must be divisible by the head count");
  require(dropout_attn >= 0.0 && dropout_attn < 1.0 && dropout_lstm >= 0.0 && dropout_lstm < 1.0,
          "dropout rates must lie in [0, 1)");
  require(d_keyword == d_x && d_entity == d_x && d_relation == d_x,
          "component widths must equal d_x (they share the encoder space)");
  require(batch_size > 0 && max_epochs > 0 && max_decode_len > 0, "training sizes must be positive");
  require(peak_lr > 0.0 && warmup_epochs >= 0 && lr_decay > 0.0 && lr_decay <= 1.0,
          "bad schedule parameters");
}

std::string ModelConfig::ToJson() const {
  json j = {
      {"heads", heads},
      {"d_x", d_x},
      {"d_z", d_z},
      {"n_layers", n_layers},
      {"d_h", d_h},
      {"n_lstm", n_lstm},
      {"dropout_attn", dropout_attn},
      {"dropout_lstm", dropout_lstm},
      {"d_keyword", d_keyword},
      {"d_entity", d_entity},
      {"d_relation", d_relation},
      {"batch_size", batch_size},
      {"max_epochs", max_epochs},
      {"peak_lr", peak_lr},
      {"warmup_epochs", warmup_epochs},
      {"lr_decay", lr_decay},
      {"max_decode_len", max_decode_len},
  };
  return j.dump(2);
}

ModelConfig ModelConfig::FromJson(const std::string& text) {
  json j = json::parse(text);
  ModelConfig c;
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j[key].get<std::decay_t<decltype(field)>>();
  };
  get("heads", c.heads);
  get("d_x", c.d_x);
  get("d_z", c.d_z);
  get("n_layers", c.n_layers);
  get("d_h", c.d_h);
  get("n_lstm", c.n_lstm);
  get("dropout_attn", c.dropout_attn);
  get("dropout_lstm", c.dropout_lstm);
  // Component widths track d_x unless overridden explicitly.
  c.d_keyword = c.d_x;
  c.d_entity = c.d_x;
  c.d_relation = c.d_x;
  get("d_keyword", c.d_keyword);
  get("d_entity", c.d_entity);
  get("d_relation", c.d_relation);
  get("batch_size", c.batch_size);
  get("max_epochs", c.max_epochs);
  get("peak_lr", c.peak_lr);
  get("warmup_epochs", c.warmup_epochs);
  get("lr_decay", c.lr_decay);
  get("max_decode_len", c.max_decode_len);
  c.Check();
  return c;
}

}  // namespace wdqa::nn
