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

#ifndef WDQA_NN_PARAMS_H_
#define WDQA_NN_PARAMS_H_

#include <cstdint>
#include <map>
#include <string>

#include "wdqa/nn/config.hpp"
#include "wdqa/nn/tape.hpp"

namespace wdqa::nn {

/// Named parameter tensors, iterated in name order everywhere so that
/// flattening, optimizer state, and checkpoints line up deterministically.
class ParamStore {
 public:
  Mat& Get(const std::string& name) { return params_.at(name); }
  const Mat& Get(const std::string& name) const { return params_.at(name); }
  bool Has(const std::string& name) const { return params_.count(name) != 0; }
  void Set(const std::string& name, Mat value) { params_[name] = std::move(value); }

  std::map<std::string, Mat>& all() { return params_; }
  const std::map<std::string, Mat>& all() const { return params_; }

  /// Total scalar count across all tensors.
  std::int64_t NumScalars() const;

 private:
  std::map<std::string, Mat> params_;
};

/// Allocates and initializes every tensor of the model for the given input
/// vocabulary size. Weights draw from U(-r, r) with r = sqrt(6 / (in + out));
/// biases and norm offsets start at zero, norm gains at one.
ParamStore InitParams(const ModelConfig& config, int input_vocab_size, std::uint64_t seed);

}  // namespace wdqa::nn

#endif  // WDQA_NN_PARAMS_H_
