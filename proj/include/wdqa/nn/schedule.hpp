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

#ifndef WDQA_NN_SCHEDULE_H_
#define WDQA_NN_SCHEDULE_H_

#include <vector>

namespace wdqa::nn {

/// Learning rate for epoch `epoch` (1-based), a pure function of the dev
/// losses observed after epochs 1..epoch-1:
///  - warmup: lr rises linearly to `peak` over `warmup_epochs` epochs
///    (lr = peak * epoch / warmup_epochs while epoch <= warmup_epochs);
///  - afterwards the rate multiplies by `decay` at each epoch whose
///    preceding dev loss increased over the one before it.
double LearningRate(int epoch, const std::vector<double>& dev_losses, double peak,
                    int warmup_epochs, double decay);

/// The whole trace lr(1..n) given n = dev_losses.size() observations.
std::vector<double> LearningRateTrace(const std::vector<double>& dev_losses, double peak,
                                      int warmup_epochs, double decay);

}  // namespace wdqa::nn

#endif  // WDQA_NN_SCHEDULE_H_
