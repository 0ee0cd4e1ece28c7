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

#include "wdqa/nn/adam.hpp"

#include <cmath>

namespace wdqa::nn {

void Adam::Step(ParamStore& params, const std::map<std::string, Mat>& grads, double lr) {
  ++step_;
  const double bc1 = 1.0 - std::pow(beta1_, step_);
  const double bc2 = 1.0 - std::pow(beta2_, step_);
  for (const auto& [name, g] : grads) {
    Mat& p = params.Get(name);
    auto mi = m_.find(name);
    if (mi == m_.end()) {
      mi = m_.emplace(name, Mat::Zero(p.rows(), p.cols())).first;
      v_.emplace(name, Mat::Zero(p.rows(), p.cols()));
    }
    Mat& m = mi->second;
    Mat& v = v_.at(name);
    m = beta1_ * m + (1.0 - beta1_) * g;
    v = beta2_ * v + (1.0 - beta2_) * g.cwiseProduct(g);
    Mat m_hat = m / bc1;
    Mat v_hat = v / bc2;
    p.array() -= lr * m_hat.array() / (v_hat.array().sqrt() + eps_);
  }
}

}  // namespace wdqa::nn
