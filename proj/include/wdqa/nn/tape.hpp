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

#ifndef WDQA_NN_TAPE_H_
#define WDQA_NN_TAPE_H_

#include <functional>
#include <memory>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace wdqa::nn {

using Mat = Eigen::MatrixXd;
using IntMat = Eigen::MatrixXi;

/// Eager reverse-mode autodiff over dense double matrices. Values are
/// computed at op creation; Backward() walks the tape in reverse. One tape
/// per forward pass; not thread-safe.
class Tape {
 public:
  /// Inserts a leaf. Gradients accumulate into it during Backward().
  int Leaf(Mat value);

  const Mat& Val(int id) const { return nodes_[id].value; }
  const Mat& Grad(int id) const { return nodes_[id].grad; }

  int MatMul(int a, int b);    // A * B
  int MatMulNT(int a, int b);  // A * B^T
  int Add(int a, int b);
  int Sub(int a, int b);
  int Scale(int a, double s);
  int AddRowVec(int a, int b);  // b is 1 x m, broadcast over rows of a
  int Hadamard(int a, int b);
  int Relu(int a);
  int Tanh(int a);
  int Sigmoid(int a);
  int RowSoftmax(int a);
  int LogRowSoftmax(int a);
  int ConcatCols(int a, int b);
  int ConcatRows(int a, int b);
  int SliceCols(int a, int from, int len);
  int GatherRows(int a, std::vector<int> rows);

  /// Row-wise layer norm with learned gain/bias (1 x m each).
  int LayerNorm(int x, int gain, int bias);

  /// out[i][j] = m(i, types(i, j)); m is n x T, types is n x n.
  int EdgeLogits(int m, std::shared_ptr<const IntMat> types);

  /// out[i][t] = sum over j with types(i, j) == t of alpha(i, j).
  int EdgePool(int alpha, std::shared_ptr<const IntMat> types, int num_types);

  /// Inverted dropout; identity when rate <= 0.
  int Dropout(int a, double rate, std::mt19937_64& rng);

  int Pick(int a, int row, int col);  // 1 x 1
  int MeanOf(const std::vector<int>& scalars);

  /// Seeds the 1x1 root with 1 and accumulates gradients into every node.
  void Backward(int root);

  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Mat value;
    Mat grad;
    std::function<void()> back;  // empty for leaves
  };

  int Push(Mat value, std::function<void()> back = {});
  Mat& G(int id) { return nodes_[id].grad; }

  std::vector<Node> nodes_;
};

}  // namespace wdqa::nn

#endif  // WDQA_NN_TAPE_H_
