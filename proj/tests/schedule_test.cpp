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

#include <doctest.h>

#include "wdqa/nn/adam.hpp"
#include "wdqa/nn/schedule.hpp"

using namespace wdqa::nn;

TEST_CASE("learning rate trace over a scripted dev-loss sequence is bit-exact") {
  const std::vector<double> dev = {5.0, 4.0, 4.5, 4.4, 4.6, 4.6, 3.0, 3.5, 3.2, 3.1};

  // Straight-line restatement of the rules: linear warmup over 2 epochs,
  // then multiply by 0.8 entering any epoch whose preceding dev loss rose.
  std::vector<double> expected;
  double cur = 1e-3;
  for (int e = 1; e <= 10; ++e) {
    if (e <= 2) {
      expected.push_back(1e-3 * e / 2.0);
      continue;
    }
    if (dev[e - 2] > dev[e - 3]) cur *= 0.8;
    expected.push_back(cur);
  }

  std::vector<double> got = LearningRateTrace(dev, 1e-3, 2, 0.8);
  REQUIRE(got.size() == expected.size());
  const std::vector<double> nominal = {
      0.5e-3,  1e-3,    1e-3,    0.8e-3,   0.8e-3,
      0.64e-3, 0.64e-3, 0.64e-3, 0.512e-3, 0.512e-3,
  };
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CAPTURE(i);
    REQUIRE(got[i] == expected[i]);  // bit-exact against the restated rules
    REQUIRE(got[i] == doctest::Approx(nominal[i]).epsilon(1e-12));
  }
}

TEST_CASE("schedule is a pure function of the observed history") {
  const std::vector<double> history = {3.0, 2.5, 2.7};
  double a = LearningRate(4, history, 1e-3, 2, 0.8);
  double b = LearningRate(4, history, 1e-3, 2, 0.8);
  CHECK(a == b);
  CHECK(a == 0.8e-3);
  // Warmup ignores the history entirely.
  CHECK(LearningRate(1, {}, 1e-3, 2, 0.8) == 0.5e-3);
  CHECK(LearningRate(2, {9.0}, 1e-3, 2, 0.8) == 1e-3);
  // Equal losses (plateau without increase) do not decay.
  CHECK(LearningRate(4, {2.0, 2.0, 2.0}, 1e-3, 2, 0.8) == 1e-3);
}

TEST_CASE("adam matches a hand-computed first step") {
  ParamStore params;
  params.Set("w", Mat::Zero(1, 1));
  std::map<std::string, Mat> grads;
  Mat g(1, 1);
  g << 0.5;
  grads.emplace("w", g);
  Adam adam;
  adam.Step(params, grads, 1e-3);
  // First step: m_hat = g, v_hat = g^2; update = -lr * g / (|g| + eps).
  CHECK(params.Get("w")(0, 0) == doctest::Approx(-1e-3).epsilon(1e-6));
}
