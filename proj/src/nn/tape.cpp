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

#include "wdqa/nn/tape.hpp"

#include <cassert>
#include <cmath>

namespace wdqa::nn {

namespace {
constexpr double kLayerNormEps = 1e-6;
}

int Tape::Push(Mat value, std::function<void()> back) {
  Node n;
  n.grad = Mat::Zero(value.rows(), value.cols());
  n.value = std::move(value);
  n.back = std::move(back);
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

int Tape::Leaf(Mat value) { return Push(std::move(value)); }

int Tape::MatMul(int a, int b) {
  int out = Push(Val(a) * Val(b));
  nodes_[out].back = [this, a, b, out] {
    G(a) += G(out) * Val(b).transpose();
    G(b) += Val(a).transpose() * G(out);
  };
  return out;
}

int Tape::MatMulNT(int a, int b) {
  int out = Push(Val(a) * Val(b).transpose());
  nodes_[out].back = [this, a, b, out] {
    G(a) += G(out) * Val(b);
    G(b) += G(out).transpose() * Val(a);
  };
  return out;
}

int Tape::Add(int a, int b) {
  int out = Push(Val(a) + Val(b));
  nodes_[out].back = [this, a, b, out] {
    G(a) += G(out);
    G(b) += G(out);
  };
  return out;
}

int Tape::Sub(int a, int b) {
  int out = Push(Val(a) - Val(b));
  nodes_[out].back = [this, a, b, out] {
    G(a) += G(out);
    G(b) -= G(out);
  };
  return out;
}

int Tape::Scale(int a, double s) {
  int out = Push(Val(a) * s);
  nodes_[out].back = [this, a, out, s] { G(a) += G(out) * s; };
  return out;
}

int Tape::AddRowVec(int a, int b) {
  assert(Val(b).rows() == 1 && Val(a).cols() == Val(b).cols());
  int out = Push(Val(a).rowwise() + Val(b).row(0));
  nodes_[out].back = [this, a, b, out] {
    G(a) += G(out);
    G(b).row(0) += G(out).colwise().sum();
  };
  return out;
}

int Tape::Hadamard(int a, int b) {
  int out = Push(Val(a).cwiseProduct(Val(b)));
  nodes_[out].back = [this, a, b, out] {
    G(a) += G(out).cwiseProduct(Val(b));
    G(b) += G(out).cwiseProduct(Val(a));
  };
  return out;
}

int Tape::Relu(int a) {
  int out = Push(Val(a).cwiseMax(0.0));
  nodes_[out].back = [this, a, out] {
    G(a) += G(out).cwiseProduct((Val(a).array() > 0.0).cast<double>().matrix());
  };
  return out;
}

int Tape::Tanh(int a) {
  int out = Push(Val(a).array().tanh().matrix());
  nodes_[out].back = [this, a, out] {
    G(a) += G(out).cwiseProduct((1.0 - Val(out).array().square()).matrix());
  };
  return out;
}

int Tape::Sigmoid(int a) {
  Mat v = (1.0 / (1.0 + (-Val(a)).array().exp())).matrix();
  int out = Push(std::move(v));
  nodes_[out].back = [this, a, out] {
    G(a) += G(out).cwiseProduct((Val(out).array() * (1.0 - Val(out).array())).matrix());
  };
  return out;
}

int Tape::RowSoftmax(int a) {
  Mat v = Val(a);
  for (int i = 0; i < v.rows(); ++i) {
    double m = v.row(i).maxCoeff();
    v.row(i) = (v.row(i).array() - m).exp();
    v.row(i) /= v.row(i).sum();
  }
  int out = Push(std::move(v));
  nodes_[out].back = [this, a, out] {
    const Mat& y = Val(out);
    const Mat& dy = G(out);
    for (int i = 0; i < y.rows(); ++i) {
      double dot = dy.row(i).dot(y.row(i));
      G(a).row(i) += y.row(i).cwiseProduct(dy.row(i).array().matrix() -
                                           Mat::Constant(1, y.cols(), dot));
    }
  };
  return out;
}

int Tape::LogRowSoftmax(int a) {
  Mat v = Val(a);
  for (int i = 0; i < v.rows(); ++i) {
    double m = v.row(i).maxCoeff();
    double lse = m + std::log((v.row(i).array() - m).exp().sum());
    v.row(i) = v.row(i).array() - lse;
  }
  int out = Push(std::move(v));
  nodes_[out].back = [this, a, out] {
    const Mat& y = Val(out);
    const Mat& dy = G(out);
    for (int i = 0; i < y.rows(); ++i) {
      double total = dy.row(i).sum();
      G(a).row(i) += dy.row(i) - y.row(i).array().exp().matrix() * total;
    }
  };
  return out;
}

int Tape::ConcatCols(int a, int b) {
  Mat v(Val(a).rows(), Val(a).cols() + Val(b).cols());
  v << Val(a), Val(b);
  int out = Push(std::move(v));
  nodes_[out].back = [this, a, b, out] {
    G(a) += G(out).leftCols(Val(a).cols());
    G(b) += G(out).rightCols(Val(b).cols());
  };
  return out;
}

int Tape::ConcatRows(int a, int b) {
  Mat v(Val(a).rows() + Val(b).rows(), Val(a).cols());
  v << Val(a), Val(b);
  int out = Push(std::move(v));
  nodes_[out].back = [this, a, b, out] {
    G(a) += G(out).topRows(Val(a).rows());
    G(b) += G(out).bottomRows(Val(b).rows());
  };
  return out;
}

int Tape::SliceCols(int a, int from, int len) {
  int out = Push(Val(a).middleCols(from, len));
  nodes_[out].back = [this, a, out, from, len] { G(a).middleCols(from, len) += G(out); };
  return out;
}

int Tape::GatherRows(int a, std::vector<int> rows) {
  Mat v(static_cast<int>(rows.size()), Val(a).cols());
  for (std::size_t i = 0; i < rows.size(); ++i) v.row(static_cast<int>(i)) = Val(a).row(rows[i]);
  int out = Push(std::move(v));
  nodes_[out].back = [this, a, out, rows = std::move(rows)] {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      G(a).row(rows[i]) += G(out).row(static_cast<int>(i));
    }
  };
  return out;
}

int Tape::LayerNorm(int x, int gain, int bias) {
  const Mat& in = Val(x);
  auto xhat = std::make_shared<Mat>(in.rows(), in.cols());
  auto sigma = std::make_shared<Eigen::VectorXd>(in.rows());
  Mat v(in.rows(), in.cols());
  for (int i = 0; i < in.rows(); ++i) {
    double mu = in.row(i).mean();
    double var = (in.row(i).array() - mu).square().mean();
    double s = std::sqrt(var + kLayerNormEps);
    (*sigma)(i) = s;
    xhat->row(i) = (in.row(i).array() - mu) / s;
    v.row(i) =
        xhat->row(i).cwiseProduct(Val(gain).row(0)) + Val(bias).row(0);
  }
  int out = Push(std::move(v));
  nodes_[out].back = [this, x, gain, bias, out, xhat, sigma] {
    const Mat& dy = G(out);
    for (int i = 0; i < dy.rows(); ++i) {
      Eigen::RowVectorXd dxhat = dy.row(i).cwiseProduct(Val(gain).row(0));
      double m1 = dxhat.mean();
      double m2 = dxhat.cwiseProduct(xhat->row(i)).mean();
      G(x).row(i) += (dxhat.array() - m1 - xhat->row(i).array() * m2).matrix() / (*sigma)(i);
      G(gain).row(0) += dy.row(i).cwiseProduct(xhat->row(i));
      G(bias).row(0) += dy.row(i);
    }
  };
  return out;
}

int Tape::EdgeLogits(int m, std::shared_ptr<const IntMat> types) {
  const Mat& src = Val(m);
  const IntMat& t = *types;
  Mat v(t.rows(), t.cols());
  for (int i = 0; i < t.rows(); ++i) {
    for (int j = 0; j < t.cols(); ++j) v(i, j) = src(i, t(i, j));
  }
  int out = Push(std::move(v));
  nodes_[out].back = [this, m, out, types] {
    const IntMat& tt = *types;
    for (int i = 0; i < tt.rows(); ++i) {
      for (int j = 0; j < tt.cols(); ++j) G(m)(i, tt(i, j)) += G(out)(i, j);
    }
  };
  return out;
}

int Tape::EdgePool(int alpha, std::shared_ptr<const IntMat> types, int num_types) {
  const Mat& a = Val(alpha);
  const IntMat& t = *types;
  Mat v = Mat::Zero(a.rows(), num_types);
  for (int i = 0; i < t.rows(); ++i) {
    for (int j = 0; j < t.cols(); ++j) v(i, t(i, j)) += a(i, j);
  }
  int out = Push(std::move(v));
  nodes_[out].back = [this, alpha, out, types] {
    const IntMat& tt = *types;
    for (int i = 0; i < tt.rows(); ++i) {
      for (int j = 0; j < tt.cols(); ++j) G(alpha)(i, j) += G(out)(i, tt(i, j));
    }
  };
  return out;
}

int Tape::Dropout(int a, double rate, std::mt19937_64& rng) {
  if (rate <= 0.0) return a;
  std::bernoulli_distribution keep(1.0 - rate);
  auto mask = std::make_shared<Mat>(Val(a).rows(), Val(a).cols());
  double scale = 1.0 / (1.0 - rate);
  for (int i = 0; i < mask->rows(); ++i) {
    for (int j = 0; j < mask->cols(); ++j) (*mask)(i, j) = keep(rng) ? scale : 0.0;
  }
  int out = Push(Val(a).cwiseProduct(*mask));
  nodes_[out].back = [this, a, out, mask] { G(a) += G(out).cwiseProduct(*mask); };
  return out;
}

int Tape::Pick(int a, int row, int col) {
  int out = Push(Mat::Constant(1, 1, Val(a)(row, col)));
  nodes_[out].back = [this, a, out, row, col] { G(a)(row, col) += G(out)(0, 0); };
  return out;
}

int Tape::MeanOf(const std::vector<int>& scalars) {
  double sum = 0.0;
  for (int id : scalars) sum += Val(id)(0, 0);
  int out = Push(Mat::Constant(1, 1, sum / static_cast<double>(scalars.size())));
  nodes_[out].back = [this, out, scalars] {
    double g = G(out)(0, 0) / static_cast<double>(scalars.size());
    for (int id : scalars) G(id)(0, 0) += g;
  };
  return out;
}

void Tape::Backward(int root) {
  assert(Val(root).rows() == 1 && Val(root).cols() == 1);
  G(root)(0, 0) = 1.0;
  for (int i = root; i >= 0; --i) {
    if (nodes_[i].back) nodes_[i].back();
  }
}

}  // namespace wdqa::nn
