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

#include "wdqa/nn/model.hpp"

#include <cmath>
#include <stdexcept>

namespace wdqa::nn {

int Model::Leaf(Tape& tape, std::map<std::string, int>& leaves, const std::string& name) const {
  auto it = leaves.find(name);
  if (it != leaves.end()) return it->second;
  int id = tape.Leaf(params_.Get(name));
  leaves.emplace(name, id);
  return id;
}

int Model::Encode(Tape& tape, std::map<std::string, int>& leaves, const EncoderInput& input,
                  const QuestionGraph& graph, bool train, std::mt19937_64& rng) const {
  const int d = config_.d_x;
  const int heads = config_.heads;
  const int d_head = d / heads;
  const double scale = 1.0 / std::sqrt(static_cast<double>(config_.d_z) / heads);

  int x = tape.GatherRows(Leaf(tape, leaves, "embed"), input.token_ids);

  for (int l = 0; l < config_.n_layers; ++l) {
    const std::string p = "enc" + std::to_string(l);
    int q = tape.MatMul(x, Leaf(tape, leaves, p + ".wq"));
    int k = tape.MatMul(x, Leaf(tape, leaves, p + ".wk"));
    int v = tape.MatMul(x, Leaf(tape, leaves, p + ".wv"));
    int edge = Leaf(tape, leaves, p + ".edge");

    int ctx = -1;
    for (int h = 0; h < heads; ++h) {
      int qh = tape.SliceCols(q, h * d_head, d_head);
      int kh = tape.SliceCols(k, h * d_head, d_head);
      int vh = tape.SliceCols(v, h * d_head, d_head);
      // Score: token-token dot product plus a per-edge-type key term.
      int logits = tape.Add(tape.MatMulNT(qh, kh),
                            tape.EdgeLogits(tape.MatMulNT(qh, edge), graph.edge_type));
      int alpha = tape.RowSoftmax(tape.Scale(logits, scale));
      if (train && config_.dropout_attn > 0.0) {
        alpha = tape.Dropout(alpha, config_.dropout_attn, rng);
      }
      // Context: weighted values plus the pooled per-edge-type value term.
      int head = tape.Add(tape.MatMul(alpha, vh),
                          tape.MatMul(tape.EdgePool(alpha, graph.edge_type, kNumEdgeTypes), edge));
      ctx = h == 0 ? head : tape.ConcatCols(ctx, head);
    }
    if (train && config_.dropout_attn > 0.0) {
      ctx = tape.Dropout(ctx, config_.dropout_attn, rng);
    }
    x = tape.LayerNorm(tape.Add(x, ctx), Leaf(tape, leaves, p + ".ln1g"),
                       Leaf(tape, leaves, p + ".ln1b"));

    int ff = tape.Relu(
        tape.AddRowVec(tape.MatMul(x, Leaf(tape, leaves, p + ".ff1")), Leaf(tape, leaves, p + ".ffb1")));
    ff = tape.AddRowVec(tape.MatMul(ff, Leaf(tape, leaves, p + ".ff2")),
                        Leaf(tape, leaves, p + ".ffb2"));
    if (train && config_.dropout_attn > 0.0) {
      ff = tape.Dropout(ff, config_.dropout_attn, rng);
    }
    x = tape.LayerNorm(tape.Add(x, ff), Leaf(tape, leaves, p + ".ln2g"),
                       Leaf(tape, leaves, p + ".ln2b"));
  }
  return x;
}

struct Model::DecodeState {
  int enc = -1;
  int mem_k = -1;  // (n + K) x d_h keys of the decoder attention
  int mem_v = -1;  // (n + K) x d_x values
  int prev_context = -1;
  std::vector<int> lstm_h;
  std::vector<int> lstm_c;
  std::vector<int> entity_pos;
  std::vector<int> relation_pos;
};

Model::DecodeState Model::StartDecode(Tape& tape, std::map<std::string, int>& leaves, int enc,
                                      const EncoderInput& input) const {
  DecodeState s;
  s.enc = enc;
  int mem = tape.ConcatRows(enc, Leaf(tape, leaves, "kw"));
  s.mem_k = tape.MatMul(mem, Leaf(tape, leaves, "cb.wk"));
  s.mem_v = tape.MatMul(mem, Leaf(tape, leaves, "cb.wv"));
  s.prev_context = Leaf(tape, leaves, "dec.c0");
  for (int j = 0; j < config_.n_lstm; ++j) {
    const std::string p = "lstm" + std::to_string(j);
    s.lstm_h.push_back(Leaf(tape, leaves, p + ".h0"));
    s.lstm_c.push_back(Leaf(tape, leaves, p + ".c0"));
  }
  s.entity_pos = input.entity_pos;
  s.relation_pos = input.relation_pos;
  return s;
}

int Model::DecodeStep(Tape& tape, std::map<std::string, int>& leaves, DecodeState& state,
                      int prev_token, bool train, std::mt19937_64& rng) const {
  const int d_h = config_.d_h;
  const OutputVocab vocab(static_cast<int>(state.entity_pos.size()),
                          static_cast<int>(state.relation_pos.size()));

  // Class-specific representation of the previous output token.
  int s_t;
  if (prev_token < 0) {
    s_t = Leaf(tape, leaves, "dec.s0");
  } else {
    switch (vocab.ClassOf(prev_token)) {
      case OutputVocab::TokenClass::kKeyword:
        s_t = tape.AddRowVec(tape.MatMul(tape.GatherRows(Leaf(tape, leaves, "kw"), {prev_token}),
                                         Leaf(tape, leaves, "sk.w")),
                             Leaf(tape, leaves, "sk.b"));
        break;
      case OutputVocab::TokenClass::kEntity:
        s_t = tape.AddRowVec(
            tape.MatMul(tape.GatherRows(state.enc, {state.entity_pos[vocab.EntitySlot(prev_token)]}),
                        Leaf(tape, leaves, "se.w")),
            Leaf(tape, leaves, "se.b"));
        break;
      case OutputVocab::TokenClass::kRelation:
        s_t = tape.AddRowVec(tape.MatMul(tape.GatherRows(
                                             state.enc,
                                             {state.relation_pos[vocab.RelationSlot(prev_token)]}),
                                         Leaf(tape, leaves, "sr.w")),
                             Leaf(tape, leaves, "sr.b"));
        break;
      default:
        throw std::logic_error("unreachable token class");
    }
  }

  // LSTM stack over [S_t; c_{t-1}].
  int x = tape.ConcatCols(s_t, state.prev_context);
  for (int j = 0; j < config_.n_lstm; ++j) {
    const std::string p = "lstm" + std::to_string(j);
    int gates = tape.AddRowVec(tape.Add(tape.MatMul(x, Leaf(tape, leaves, p + ".wx")),
                                        tape.MatMul(state.lstm_h[j], Leaf(tape, leaves, p + ".wh"))),
                               Leaf(tape, leaves, p + ".b"));
    int gi = tape.Sigmoid(tape.SliceCols(gates, 0, d_h));
    int gf = tape.Sigmoid(tape.SliceCols(gates, d_h, d_h));
    int gg = tape.Tanh(tape.SliceCols(gates, 2 * d_h, d_h));
    int go = tape.Sigmoid(tape.SliceCols(gates, 3 * d_h, d_h));
    int cell = tape.Add(tape.Hadamard(gf, state.lstm_c[j]), tape.Hadamard(gi, gg));
    int h = tape.Hadamard(go, tape.Tanh(cell));
    state.lstm_c[j] = cell;
    state.lstm_h[j] = h;
    x = h;
    if (train && config_.dropout_lstm > 0.0) {
      x = tape.Dropout(x, config_.dropout_lstm, rng);
    }
  }
  int h_top = state.lstm_h.back();

  // Context over encoder states and the keyword table.
  int q = tape.MatMul(h_top, Leaf(tape, leaves, "cb.wq"));
  int attn = tape.RowSoftmax(tape.Scale(tape.MatMulNT(q, state.mem_k), 1.0 / std::sqrt(d_h)));
  int c_t = tape.MatMul(attn, state.mem_v);
  state.prev_context = c_t;

  // Per-class pointer scores, concatenated for one softmax.
  int hc = tape.ConcatCols(h_top, c_t);
  const double out_scale = 1.0 / std::sqrt(d_h);
  int lk = tape.Scale(tape.MatMulNT(tape.MatMul(hc, Leaf(tape, leaves, "ok.w")),
                                    Leaf(tape, leaves, "kw")),
                      out_scale);
  int le = tape.Scale(tape.MatMulNT(tape.MatMul(hc, Leaf(tape, leaves, "oe.w")),
                                    tape.GatherRows(state.enc, state.entity_pos)),
                      out_scale);
  int lr = tape.Scale(tape.MatMulNT(tape.MatMul(hc, Leaf(tape, leaves, "or.w")),
                                    tape.GatherRows(state.enc, state.relation_pos)),
                      out_scale);
  return tape.ConcatCols(tape.ConcatCols(lk, le), lr);
}

int Model::SequenceLoss(Tape& tape, std::map<std::string, int>& leaves, const EncoderInput& input,
                        const QuestionGraph& graph, const std::vector<int>& targets, bool train,
                        std::mt19937_64& rng) const {
  if (targets.empty()) throw std::invalid_argument("empty target sequence");
  int enc = Encode(tape, leaves, input, graph, train, rng);
  DecodeState state = StartDecode(tape, leaves, enc, input);
  std::vector<int> terms;
  int prev = -1;
  for (int target : targets) {
    int logits = DecodeStep(tape, leaves, state, prev, train, rng);
    int logp = tape.LogRowSoftmax(logits);
    terms.push_back(tape.Scale(tape.Pick(logp, 0, target), -1.0));
    prev = target;
  }
  return tape.MeanOf(terms);
}

std::vector<int> Model::GreedyDecode(const EncoderInput& input, const QuestionGraph& graph) const {
  Tape tape;
  std::map<std::string, int> leaves;
  std::mt19937_64 rng(0);
  int enc = Encode(tape, leaves, input, graph, /*train=*/false, rng);
  DecodeState state = StartDecode(tape, leaves, enc, input);
  std::vector<int> out;
  int prev = -1;
  for (int t = 0; t < config_.max_decode_len; ++t) {
    int logits = DecodeStep(tape, leaves, state, prev, /*train=*/false, rng);
    const Mat& row = tape.Val(logits);
    int best = 0;
    for (int j = 1; j < row.cols(); ++j) {
      if (row(0, j) > row(0, best)) best = j;
    }
    if (best == kKwEoq) break;
    out.push_back(best);
    prev = best;
  }
  return out;
}

}  // namespace wdqa::nn
