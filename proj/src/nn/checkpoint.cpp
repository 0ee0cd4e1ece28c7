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

#include "wdqa/nn/checkpoint.hpp"

#include <cstdint>
#include <fstream>
#include <vector>

#include <json.hpp>

namespace wdqa::nn {

using nlohmann::json;

namespace {
constexpr char kMagic[] = "WDQA1\n";
constexpr std::size_t kMagicLen = 6;
}  // namespace

void SaveModel(const std::string& path, const Model& model) {
  json tensors = json::array();
  for (const auto& [name, m] : model.params().all()) {
    tensors.push_back({{"name", name}, {"rows", m.rows()}, {"cols", m.cols()}});
  }
  json header = {
      {"config", json::parse(model.config().ToJson())},
      {"symbols", model.vocab().symbols()},
      {"tensors", tensors},
  };
  const std::string head = header.dump();

  std::ofstream out(path, std::ios::binary);
  if (!out) throw CheckpointError("cannot open " + path + " for writing");
  out.write(kMagic, kMagicLen);
  std::uint64_t len = head.size();
  out.write(reinterpret_cast<const char*>(&len), sizeof(len));
  out.write(head.data(), static_cast<std::streamsize>(head.size()));
  for (const auto& [name, m] : model.params().all()) {
    out.write(reinterpret_cast<const char*>(m.data()),
              static_cast<std::streamsize>(sizeof(double) * m.size()));
  }
  if (!out) throw CheckpointError("write failed for " + path);
}

Model LoadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open " + path);
  char magic[kMagicLen];
  in.read(magic, kMagicLen);
  if (!in || std::string(magic, kMagicLen) != std::string(kMagic, kMagicLen)) {
    throw CheckpointError(path + " is not a model file");
  }
  std::uint64_t len = 0;
  in.read(reinterpret_cast<char*>(&len), sizeof(len));
  std::string head(len, '\0');
  in.read(head.data(), static_cast<std::streamsize>(len));
  if (!in) throw CheckpointError("truncated header in " + path);

  json header;
  try {
    header = json::parse(head);
  } catch (const json::exception& e) {
    throw CheckpointError(std::string("bad header: ") + e.what());
  }
  ModelConfig config = ModelConfig::FromJson(header.at("config").dump());
  InputVocab vocab = InputVocab::FromSymbols(header.at("symbols").get<std::vector<std::string>>());

  ParamStore store;
  for (const auto& t : header.at("tensors")) {
    const std::string name = t.at("name").get<std::string>();
    const long rows = t.at("rows").get<long>();
    const long cols = t.at("cols").get<long>();
    Mat m(rows, cols);
    in.read(reinterpret_cast<char*>(m.data()),
            static_cast<std::streamsize>(sizeof(double) * m.size()));
    if (!in) throw CheckpointError("truncated tensor " + name + " in " + path);
    store.Set(name, std::move(m));
  }
  return Model(std::move(config), std::move(store), std::move(vocab));
}

}  // namespace wdqa::nn
