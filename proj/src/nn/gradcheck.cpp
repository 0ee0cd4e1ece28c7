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

#include "wdqa/nn/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace wdqa::nn {

std::string GradCheckReport::Render() const {
  std::ostringstream os;
  for (const auto& g : groups) {
    os << (g.ok ? "ok   " : "FAIL ") << g.name << " max_rel_err=" << g.max_rel_err << "\n";
  }
  os << (ok ? "all gradients ok" : "gradient check FAILED") << "\n";
  return os.str();
}

double LossValue(const Model& model, const EncoderInput& input, const QuestionGraph& graph,
                 const std::vector<int>& targets) {
  Tape tape;
  std::map<std::string, int> leaves;
  std::mt19937_64 rng(0);
  int loss = model.SequenceLoss(tape, leaves, input, graph, targets, /*train=*/false, rng);
  return tape.Val(loss)(0, 0);
}

std::map<std::string, Mat> AnalyticGradients(const Model& model, const EncoderInput& input,
                                             const QuestionGraph& graph,
                                             const std::vector<int>& targets) {
  Tape tape;
  std::map<std::string, int> leaves;
  std::mt19937_64 rng(0);
  int loss = model.SequenceLoss(tape, leaves, input, graph, targets, /*train=*/false, rng);
  tape.Backward(loss);
  std::map<std::string, Mat> grads;
  for (const auto& [name, id] : leaves) grads.emplace(name, tape.Grad(id));
  return grads;
}

GradCheckReport CheckGradients(ParamStore& params,
                               const std::function<double(const ParamStore&)>& loss,
                               const std::map<std::string, Mat>& grads, double step, double tol,
                               int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GradCheckReport report;
  for (const auto& [name, g] : grads) {
    Mat& p = params.Get(name);
    GradCheckResult res{name, 0.0, true};
    const long total = p.size();
    const int n = std::min<long>(samples, total);
    for (int s = 0; s < n; ++s) {
      long flat = std::uniform_int_distribution<long>(0, total - 1)(rng);
      long i = flat % p.rows();
      long j = flat / p.rows();
      const double orig = p(i, j);
      p(i, j) = orig + step;
      const double up = loss(params);
      p(i, j) = orig - step;
      const double down = loss(params);
      p(i, j) = orig;
      const double numeric = (up - down) / (2.0 * step);
      const double analytic = g(i, j);
      const double rel = std::abs(analytic - numeric) /
                         std::max({std::abs(analytic), std::abs(numeric), 1e-6});
      res.max_rel_err = std::max(res.max_rel_err, rel);
    }
    res.ok = res.max_rel_err < tol;
    report.ok = report.ok && res.ok;
    report.groups.push_back(std::move(res));
  }
  return report;
}

GradCheckReport CheckModelGradients(Model& model, const EncoderInput& input,
                                    const QuestionGraph& graph, const std::vector<int>& targets,
                                    double step, double tol, int samples, std::uint64_t seed) {
  auto grads = AnalyticGradients(model, input, graph, targets);
  auto loss = [&](const ParamStore&) { return LossValue(model, input, graph, targets); };
  return CheckGradients(model.params(), loss, grads, step, tol, samples, seed);
}

}  // namespace wdqa::nn
