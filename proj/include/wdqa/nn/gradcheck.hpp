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

#ifndef WDQA_NN_GRADCHECK_H_
#define WDQA_NN_GRADCHECK_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wdqa/nn/model.hpp"

namespace wdqa::nn {

struct GradCheckResult {
  std::string name;
  double max_rel_err = 0.0;
  bool ok = true;
};

struct GradCheckReport {
  std::vector<GradCheckResult> groups;
  bool ok = true;

  std::string Render() const;
};

/// Deterministic (dropout-free) loss of one example under the current
/// parameters.
double LossValue(const Model& model, const EncoderInput& input, const QuestionGraph& graph,
                 const std::vector<int>& targets);

/// Analytic parameter gradients of the same loss, keyed by tensor name.
std::map<std::string, Mat> AnalyticGradients(const Model& model, const EncoderInput& input,
                                             const QuestionGraph& graph,
                                             const std::vector<int>& targets);

/// Compares analytic gradients against central differences
/// (f(x+h) - f(x-h)) / 2h on up to `samples` randomly chosen coordinates of
/// every tensor; relative error |a - n| / max(|a|, |n|, 1e-6) must stay
/// under `tol`. `params` is perturbed in place and restored.
GradCheckReport CheckGradients(ParamStore& params,
                               const std::function<double(const ParamStore&)>& loss,
                               const std::map<std::string, Mat>& grads, double step = 1e-5,
                               double tol = 1e-4, int samples = 4, std::uint64_t seed = 0);

/// End-to-end check of one example against the model's own loss.
GradCheckReport CheckModelGradients(Model& model, const EncoderInput& input,
                                    const QuestionGraph& graph, const std::vector<int>& targets,
                                    double step = 1e-5, double tol = 1e-4, int samples = 4,
                                    std::uint64_t seed = 0);

}  // namespace wdqa::nn

#endif  // WDQA_NN_GRADCHECK_H_
