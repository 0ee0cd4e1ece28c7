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

#include "wdqa/nn/schedule.hpp"

namespace wdqa::nn {

double LearningRate(int epoch, const std::vector<double>& dev_losses, double peak,
                    int warmup_epochs, double decay) {
  if (warmup_epochs > 0 && epoch <= warmup_epochs) {
    return peak * static_cast<double>(epoch) / warmup_epochs;
  }
  double lr = peak;
  // Decisions after warmup: entering epoch e (> warmup) the rate decays when
  // dev_losses[e-2] > dev_losses[e-3], i.e. the loss after the previous
  // epoch rose over the one before it.
  int upto = epoch - 2;
  if (upto >= static_cast<int>(dev_losses.size())) upto = static_cast<int>(dev_losses.size()) - 1;
  for (int i = 1; i <= upto; ++i) {
    if (i + 2 <= warmup_epochs) continue;  // decisions start after warmup
    if (dev_losses[i] > dev_losses[i - 1]) lr *= decay;
  }
  return lr;
}

std::vector<double> LearningRateTrace(const std::vector<double>& dev_losses, double peak,
                                      int warmup_epochs, double decay) {
  std::vector<double> out;
  for (int e = 1; e <= static_cast<int>(dev_losses.size()); ++e) {
    std::vector<double> seen(dev_losses.begin(), dev_losses.begin() + (e - 1));
    out.push_back(LearningRate(e, seen, peak, warmup_epochs, decay));
  }
  return out;
}

}  // namespace wdqa::nn
