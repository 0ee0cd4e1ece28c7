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

#ifndef WDQA_NN_ADAM_H_
#define WDQA_NN_ADAM_H_

#include <map>
#include <string>

#include "wdqa/nn/params.hpp"
#include "wdqa/nn/tape.hpp"

namespace wdqa::nn {

/// Adam with bias correction; beta1 = 0.9, beta2 = 0.999, eps = 1e-8.
class Adam {
 public:
  explicit Adam(double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8)
      : beta1_(beta1), beta2_(beta2), eps_(eps) {}

  /// Applies one step to every named tensor present in `grads`.
  void Step(ParamStore& params, const std::map<std::string, Mat>& grads, double lr);

 private:
  double beta1_;
  double beta2_;
  double eps_;
  long step_ = 0;
  std::map<std::string, Mat> m_;
  std::map<std::string, Mat> v_;
};

}  // namespace wdqa::nn

#endif  // WDQA_NN_ADAM_H_
