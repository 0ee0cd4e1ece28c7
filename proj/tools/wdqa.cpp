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

// Command-line front end: parse, exec, eval, stats, split, train, predict,
// gradcheck.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wdqa/data/corpus.hpp"
#include "wdqa/kg/executor.hpp"
#include "wdqa/kg/graph.hpp"
#include "wdqa/metrics/metrics.hpp"
#include "wdqa/nn/checkpoint.hpp"
#include "wdqa/nn/gradcheck.hpp"
#include "wdqa/nn/train.hpp"
#include "wdqa/sparql/parser.hpp"
#include "wdqa/sparql/printer.hpp"
#include "wdqa/sparql/validate.hpp"

namespace {

using nlohmann::json;
using namespace wdqa;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string QueryText(const std::string& inline_text, const std::string& file) {
  if (!inline_text.empty()) return inline_text;
  if (!file.empty()) return ReadFile(file);
  throw std::runtime_error("provide --query or --query-file");
}

nn::LabelMap LoadLabelMap(const std::string& path) {
  nn::LabelMap labels;
  if (path.empty()) return labels;
  std::istringstream in(ReadFile(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string iri, lang;
    if (!(ls >> iri >> lang)) continue;
    std::string label;
    std::getline(ls, label);
    if (!label.empty() && label[0] == ' ') label.erase(0, label.find_first_not_of(' '));
    // Last writer wins across languages; zh labels should come last if both
    // are present. In practice the sidecar carries one language.
    labels[iri] = label;
  }
  return labels;
}

/// Prediction files: JSON array or JSONL of {"id": ..., "sparql": ...}.
std::map<std::string, std::string> LoadPredictions(const std::string& path) {
  std::map<std::string, std::string> out;
  const std::string text = ReadFile(path);
  auto add = [&](const json& j) {
    out[j.at("id").get<std::string>()] = j.at("sparql").get<std::string>();
  };
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    for (const auto& j : json::parse(text)) add(j);
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      add(json::parse(line));
    }
  }
  return out;
}

int CmdParse(const std::string& query, const std::string& query_file, bool check) {
  sparql::Query q = sparql::ParseQuery(QueryText(query, query_file));
  if (check) {
    auto diags = sparql::Validate(q);
    for (const auto& d : diags) std::cerr << d.Render() << "\n";
    if (!diags.empty()) return 1;
  }
  std::cout << sparql::PrintQuery(q) << "\n";
  return 0;
}

int CmdExec(const std::string& graph_path, const std::string& query,
            const std::string& query_file) {
  std::vector<std::string> warnings;
  kg::KnowledgeGraph graph = kg::LoadGraph(ReadFile(graph_path), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  sparql::Query q = sparql::ParseQuery(QueryText(query, query_file));
  kg::ExecDiagnostics diag;
  kg::AnswerSet answers = kg::Execute(graph, q, &diag);
  for (const auto& note : diag.notes) std::cerr << "note: " << note << "\n";
  const std::string rendered = answers.Render();
  std::cout << rendered;
  if (rendered.empty() || rendered.back() != '\n') std::cout << "\n";
  return 0;
}

int CmdEval(const std::string& graph_path, const std::string& gold_path,
            const std::string& pred_path) {
  kg::KnowledgeGraph graph = kg::LoadGraph(ReadFile(graph_path));
  std::vector<std::string> diags;
  auto records = data::LoadCorpus(ReadFile(gold_path), &diags);
  for (const auto& d : diags) std::cerr << d << "\n";
  auto preds = LoadPredictions(pred_path);

  std::vector<metrics::EvalRecord> evals;
  for (const auto& r : records) {
    metrics::EvalRecord e;
    e.id = r.id;
    e.gold = sparql::ParseQuery(r.gold_sparql);
    auto it = preds.find(r.id);
    if (it != preds.end()) {
      try {
        sparql::Query p = sparql::ParseQuery(it->second);
        if (sparql::Validate(p).empty()) e.pred = std::move(p);
      } catch (const std::exception&) {
      }
    }
    evals.push_back(std::move(e));
  }
  std::cout << metrics::RenderScores(metrics::ScoreCorpus(evals, graph));
  return 0;
}

int CmdStats(const std::string& corpus_path) {
  std::vector<std::string> diags;
  auto records = data::LoadCorpus(ReadFile(corpus_path), &diags);
  for (const auto& d : diags) std::cerr << d << "\n";
  std::cout << data::RenderStats(data::ComputeStats(records));
  // Type distribution alongside the base stats.
  std::map<data::QuestionType, std::size_t> by_type;
  for (const auto& r : records) {
    by_type[data::ClassifyQuestionType(sparql::ParseQuery(r.gold_sparql))]++;
  }
  for (const auto& [type, n] : by_type) {
    std::cout << "type_" << data::QuestionTypeName(type) << " " << n << "\n";
  }
  return 0;
}

json RecordToJson(const data::QuestionRecord& r) {
  json j = {{"id", r.id}, {"question_zh", r.question_zh}, {"sparql", r.gold_sparql}};
  if (r.question_en) j["question_en"] = *r.question_en;
  if (r.template_type) j["template_type"] = *r.template_type;
  json ents = json::array(), rels = json::array();
  for (const auto& e : r.entity_candidates) ents.push_back(sparql::RenderIri(e));
  for (const auto& rel : r.relation_candidates) rels.push_back(sparql::RenderIri(rel));
  j["entities"] = std::move(ents);
  j["relations"] = std::move(rels);
  return j;
}

int CmdSplit(const std::string& corpus_path, double train, double dev, double test,
             std::uint64_t seed, const std::string& out_prefix) {
  std::vector<std::string> diags;
  auto records = data::LoadCorpus(ReadFile(corpus_path), &diags);
  for (const auto& d : diags) std::cerr << d << "\n";
  data::Split split = data::SplitCorpus(records, {train, dev, test}, seed);
  auto dump = [&](const std::vector<data::QuestionRecord>& part, const std::string& name) {
    json arr = json::array();
    for (const auto& r : part) arr.push_back(RecordToJson(r));
    WriteFile(out_prefix + "." + name + ".json", arr.dump(2) + "\n");
    std::cout << name << " " << part.size() << "\n";
  };
  dump(split.train, "train");
  dump(split.dev, "dev");
  dump(split.test, "test");
  return 0;
}

int CmdTrain(const std::string& corpus_path, const std::string& dev_path,
             const std::string& labels_path, const std::string& config_path,
             const std::string& checkpoint_path, std::uint64_t seed, double target_exact) {
  std::vector<std::string> diags;
  auto train_records = data::LoadCorpus(ReadFile(corpus_path), &diags);
  std::vector<data::QuestionRecord> dev_records;
  if (!dev_path.empty()) dev_records = data::LoadCorpus(ReadFile(dev_path), &diags);
  for (const auto& d : diags) std::cerr << d << "\n";

  nn::ModelConfig config;
  if (!config_path.empty()) config = nn::ModelConfig::FromJson(ReadFile(config_path));
  nn::LabelMap labels = LoadLabelMap(labels_path);

  std::vector<data::QuestionRecord> all = train_records;
  all.insert(all.end(), dev_records.begin(), dev_records.end());
  nn::InputVocab vocab = nn::InputVocab::Build(all);
  nn::ParamStore params = nn::InitParams(config, vocab.size(), seed);
  nn::Model model(config, std::move(params), std::move(vocab));

  nn::TrainOptions options;
  options.seed = seed;
  options.log = &std::cerr;
  if (target_exact > 0.0) options.target_exact = target_exact;
  nn::TrainResult result = nn::Train(model, train_records, dev_records, labels, options);

  if (!checkpoint_path.empty()) nn::SaveModel(checkpoint_path, model);
  if (!result.epochs.empty()) {
    const auto& last = result.epochs.back();
    std::cout << "epochs " << result.epochs.size() << "\ndev_loss " << last.dev_loss
              << "\ndev_exact " << last.dev_exact << "\n";
  }
  return 0;
}

int CmdPredict(const std::string& corpus_path, const std::string& checkpoint_path,
               const std::string& labels_path, const std::string& out_path) {
  std::vector<std::string> diags;
  auto records = data::LoadCorpus(ReadFile(corpus_path), &diags);
  for (const auto& d : diags) std::cerr << d << "\n";
  nn::Model model = nn::LoadModel(checkpoint_path);
  nn::LabelMap labels = LoadLabelMap(labels_path);

  std::ostringstream out;
  for (const auto& r : records) {
    json j = {{"id", r.id}, {"sparql", nn::PredictText(model, r, labels)}};
    out << j.dump() << "\n";
  }
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    WriteFile(out_path, out.str());
  }
  return 0;
}

int CmdGradCheck(const std::string& corpus_path, const std::string& config_path,
                 const std::string& labels_path, std::uint64_t seed, int samples) {
  std::vector<std::string> diags;
  auto records = data::LoadCorpus(ReadFile(corpus_path), &diags);
  for (const auto& d : diags) std::cerr << d << "\n";

  nn::ModelConfig config;
  if (!config_path.empty()) {
    config = nn::ModelConfig::FromJson(ReadFile(config_path));
  } else {
    // Small deterministic default so the check runs in seconds.
    config.heads = 2;
    config.d_x = config.d_z = 16;
    config.d_keyword = config.d_entity = config.d_relation = 16;
    config.n_layers = 2;
    config.d_h = 24;
    config.n_lstm = 2;
    config.dropout_attn = 0.0;
    config.dropout_lstm = 0.0;
  }
  nn::LabelMap labels = LoadLabelMap(labels_path);
  nn::InputVocab vocab = nn::InputVocab::Build(records);
  nn::Model model(config, nn::InitParams(config, vocab.size(), seed), vocab);

  for (const auto& r : records) {
    try {
      sparql::Query gold = sparql::ParseQuery(r.gold_sparql);
      std::vector<int> targets = nn::QueryToTokens(gold, r);
      auto [input, graph] = nn::BuildInput(r, vocab, labels);
      auto report = nn::CheckModelGradients(model, input, graph, targets, 1e-5, 1e-4, samples, seed);
      std::cout << "record " << r.id << "\n" << report.Render();
      return report.ok ? 0 : 1;
    } catch (const nn::LinearizeError&) {
      continue;
    }
  }
  throw std::runtime_error("no record in the corpus linearizes into the output language");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wikidata question answering toolkit"};
  app.require_subcommand(1);

  std::string query, query_file, graph_path, corpus_path, dev_path, gold_path, pred_path;
  std::string config_path, checkpoint_path, labels_path, out_path, out_prefix;
  double ratio_train = 0.8, ratio_dev = 0.1, ratio_test = 0.1, target_exact = 0.0;
  std::uint64_t seed = 0;
  int samples = 4;
  bool check = false;

  auto* parse = app.add_subcommand("parse", "parse a query and print its canonical form");
  parse->add_option("--query", query, "query text");
  parse->add_option("--query-file", query_file, "file holding the query");
  parse->add_flag("--check", check, "also run the validator");

  auto* exec = app.add_subcommand("exec", "execute a query over a graph file");
  exec->add_option("--graph", graph_path, "triple file")->required();
  exec->add_option("--query", query, "query text");
  exec->add_option("--query-file", query_file, "file holding the query");

  auto* eval = app.add_subcommand("eval", "score predictions against gold queries");
  eval->add_option("--graph", graph_path, "triple file")->required();
  eval->add_option("--gold", gold_path, "gold corpus file")->required();
  eval->add_option("--pred", pred_path, "prediction file (id/sparql JSON records)")->required();

  auto* stats = app.add_subcommand("stats", "corpus statistics");
  stats->add_option("--corpus", corpus_path, "corpus file")->required();

  auto* split = app.add_subcommand("split", "random train/dev/test partition");
  split->add_option("--corpus", corpus_path, "corpus file")->required();
  split->add_option("--train", ratio_train, "train ratio");
  split->add_option("--dev", ratio_dev, "dev ratio");
  split->add_option("--test", ratio_test, "test ratio");
  split->add_option("--seed", seed, "shuffle seed");
  split->add_option("--out-prefix", out_prefix, "output path prefix")->required();

  auto* train = app.add_subcommand("train", "train a model");
  train->add_option("--corpus", corpus_path, "training corpus")->required();
  train->add_option("--dev", dev_path, "dev corpus");
  train->add_option("--labels", labels_path, "label sidecar for mention edges");
  train->add_option("--config", config_path, "model config JSON");
  train->add_option("--checkpoint", checkpoint_path, "output model file");
  train->add_option("--seed", seed, "init/shuffle seed");
  train->add_option("--target-exact", target_exact, "stop at this dev exact-match rate");

  auto* predict = app.add_subcommand("predict", "decode queries for a corpus");
  predict->add_option("--corpus", corpus_path, "corpus file")->required();
  predict->add_option("--checkpoint", checkpoint_path, "model file")->required();
  predict->add_option("--labels", labels_path, "label sidecar");
  predict->add_option("--out", out_path, "output file (default stdout)");

  auto* gradcheck = app.add_subcommand("gradcheck", "finite-difference gradient check");
  gradcheck->add_option("--corpus", corpus_path, "corpus file")->required();
  gradcheck->add_option("--config", config_path, "model config JSON");
  gradcheck->add_option("--labels", labels_path, "label sidecar");
  gradcheck->add_option("--seed", seed, "init seed");
  gradcheck->add_option("--samples", samples, "coordinates sampled per tensor");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse) return CmdParse(query, query_file, check);
    if (*exec) return CmdExec(graph_path, query, query_file);
    if (*eval) return CmdEval(graph_path, gold_path, pred_path);
    if (*stats) return CmdStats(corpus_path);
    if (*split) return CmdSplit(corpus_path, ratio_train, ratio_dev, ratio_test, seed, out_prefix);
    if (*train) {
      return CmdTrain(corpus_path, dev_path, labels_path, config_path, checkpoint_path, seed,
                      target_exact);
    }
    if (*predict) return CmdPredict(corpus_path, checkpoint_path, labels_path, out_path);
    if (*gradcheck) return CmdGradCheck(corpus_path, config_path, labels_path, seed, samples);
  } catch (const sparql::ParseError& e) {
    std::cerr << "ParseError: " << e.Render() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "Error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
