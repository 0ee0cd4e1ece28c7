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

#ifndef WDQA_NN_CHECKPOINT_H_
#define WDQA_NN_CHECKPOINT_H_

#include <stdexcept>
#include <string>

#include "wdqa/nn/model.hpp"

namespace wdqa::nn {

struct CheckpointError : std::runtime_error {
  explicit CheckpointError(std::string message) : std::runtime_error(std::move(message)) {}
};

/// Binary model file: magic "WDQA1\n", a little-endian uint64 header length,
/// a JSON header (config, input symbols, tensor names and shapes), then the
/// tensor payloads as column-major little-endian doubles in header order.
void SaveModel(const std::string& path, const Model& model);
Model LoadModel(const std::string& path);

}  // namespace wdqa::nn

#endif  // WDQA_NN_CHECKPOINT_H_
