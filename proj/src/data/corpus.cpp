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

#include "wdqa/data/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wdqa/sparql/parser.hpp"
#include "wdqa/sparql/printer.hpp"
#include "wdqa/sparql/validate.hpp"
#include "wdqa/text.hpp"

namespace wdqa::data {

using nlohmann::json;
using sparql::FilterOp;
using sparql::Iri;
using sparql::LiteralTag;
using sparql::Prefix;
using sparql::Query;
using sparql::QueryForm;

const char* QuestionTypeName(QuestionType t) {
  switch (t) {
    case QuestionType::kFact: return "fact";
    case QuestionType::kFactDedup: return "fact_dedup";
    case QuestionType::kDual: return "dual";
    case QuestionType::kBoolean: return "boolean";
    case QuestionType::kCounting: return "counting";
    case QuestionType::kDate: return "date";
    case QuestionType::kMaxMin: return "maxmin";
    case QuestionType::kQualifier: return "qualifier";
  }
  return "?";
}

namespace {

Iri ParseIriText(const std::string& text, std::size_t index) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw SchemaError(index, "candidate '" + text + "' is not prefixed");
  auto prefix = sparql::PrefixFromName(text.substr(0, colon));
  if (!prefix) throw SchemaError(index, "candidate '" + text + "' has an unknown prefix");
  return Iri{*prefix, text.substr(colon + 1)};
}

// Every IRI of the gold query must appear among the record's candidates.
bool CandidatesCoverQuery(const QuestionRecord& r, const Query& q, std::string* missing) {
  auto has = [&](const Iri& iri) {
    const auto& pool = iri.prefix == Prefix::kWd ? r.entity_candidates : r.relation_candidates;
    return std::find(pool.begin(), pool.end(), iri) != pool.end();
  };
  for (const auto& p : q.patterns) {
    for (const sparql::Term* t : {&p.subject, &p.predicate, &p.object}) {
      if (const auto* iri = std::get_if<Iri>(t); iri && !has(*iri)) {
        *missing = sparql::RenderIri(*iri);
        return false;
      }
    }
  }
  return true;
}

QuestionRecord RecordFromJson(const json& j, std::size_t index) {
  if (!j.is_object()) throw SchemaError(index, "record is not an object");
  QuestionRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    r.question_zh = j.at("question_zh").get<std::string>();
    r.gold_sparql = j.at("sparql").get<std::string>();
    if (j.contains("question_en")) r.question_en = j["question_en"].get<std::string>();
    if (j.contains("template_type")) r.template_type = j["template_type"].get<std::string>();
    for (const auto& e : j.at("entities")) {
      r.entity_candidates.push_back(ParseIriText(e.get<std::string>(), index));
    }
    for (const auto& rel : j.at("relations")) {
      r.relation_candidates.push_back(ParseIriText(rel.get<std::string>(), index));
    }
  } catch (const json::exception& e) {
    throw SchemaError(index, e.what());
  }
  for (const auto& e : r.entity_candidates) {
    if (e.prefix != Prefix::kWd) throw SchemaError(index, "entity candidate must be wd-prefixed");
  }
  for (const auto& rel : r.relation_candidates) {
    if (rel.prefix == Prefix::kWd) {
      throw SchemaError(index, "relation candidate must be wdt/p/ps/pq-prefixed");
    }
  }
  return r;
}

}  // namespace

std::vector<QuestionRecord> LoadCorpus(const std::string& source,
                                       std::vector<std::string>* diagnostics) {
  std::vector<json> raw;
  std::string trimmed = source;
  std::size_t first = trimmed.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && trimmed[first] == '[') {
    json arr = json::parse(trimmed);
    for (auto& item : arr) raw.push_back(std::move(item));
  } else {
    std::istringstream in(source);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      raw.push_back(json::parse(line));
    }
  }

  std::vector<QuestionRecord> records;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    QuestionRecord r = RecordFromJson(raw[i], i);
    if (!ids.insert(r.id).second) throw DuplicateIdError(r.id);
    Query gold;
    try {
      gold = sparql::ParseQuery(r.gold_sparql);
    } catch (const sparql::ParseError& e) {
      if (diagnostics) diagnostics->push_back("record " + r.id + " skipped: " + e.Render());
      continue;
    }
    if (auto diags = sparql::Validate(gold); !diags.empty()) {
      if (diagnostics) {
        diagnostics->push_back("record " + r.id + " skipped: " + diags.front().Render());
      }
      continue;
    }
    std::string missing;
    if (!CandidatesCoverQuery(r, gold, &missing)) {
      if (diagnostics) {
        diagnostics->push_back("record " + r.id + " skipped: gold IRI " + missing +
                               " not among candidates");
      }
      continue;
    }
    records.push_back(std::move(r));
  }
  return records;
}

QuestionType ClassifyQuestionType(const Query& q) {
  if (q.form == QueryForm::kAsk) return QuestionType::kBoolean;
  if (q.count) return QuestionType::kCounting;
  if (q.projection.size() >= 2) return QuestionType::kDual;
  if (q.order_by && q.limit) return QuestionType::kMaxMin;
  for (const auto& p : q.patterns) {
    if (const auto* iri = std::get_if<Iri>(&p.predicate); iri && iri->prefix == Prefix::kPq) {
      return QuestionType::kQualifier;
    }
  }
  bool dated = false;
  for (const auto& f : q.filters) {
    if (f.op == FilterOp::kYearCompare) dated = true;
    for (const auto& a : f.args) {
      if (const auto* lit = std::get_if<sparql::Literal>(&a); lit && lit->tag == LiteralTag::kDate) {
        dated = true;
      }
    }
  }
  for (const auto& p : q.patterns) {
    for (const sparql::Term* t : {&p.subject, &p.object}) {
      if (const auto* lit = std::get_if<sparql::Literal>(t); lit && lit->tag == LiteralTag::kDate) {
        dated = true;
      }
    }
  }
  if (dated) return QuestionType::kDate;
  if (q.distinct) return QuestionType::kFactDedup;
  return QuestionType::kFact;
}

CorpusStats ComputeStats(const std::vector<QuestionRecord>& records, const Tokenizer& tokenizer) {
  if (records.empty()) throw EmptyCorpusError();
  Tokenizer tok = tokenizer ? tokenizer : Tokenizer([](std::string_view s) {
    return text::DefaultTokenize(s);
  });

  CorpusStats s;
  s.n_questions = records.size();
  std::set<std::string> vocab, entities, relations, keywords;
  double total_len = 0;
  for (const auto& r : records) {
    total_len += static_cast<double>(text::Length(r.question_zh));
    for (const auto& t : tok(r.question_zh)) vocab.insert(t);
    Query q = sparql::ParseQuery(r.gold_sparql);
    for (const auto& p : q.patterns) {
      for (const sparql::Term* t : {&p.subject, &p.predicate, &p.object}) {
        if (const auto* iri = std::get_if<Iri>(t)) {
          (iri->prefix == Prefix::kWd ? entities : relations).insert(sparql::RenderIri(*iri));
        }
      }
    }
    if (q.form == QueryForm::kAsk) {
      keywords.insert("ASK");
    } else {
      keywords.insert("SELECT");
      if (q.count) keywords.insert("COUNT");
      if (q.distinct) keywords.insert("DISTINCT");
    }
    for (const auto& f : q.filters) {
      keywords.insert("FILTER");
      switch (f.op) {
        case FilterOp::kContains: keywords.insert("CONTAINS"); break;
        case FilterOp::kStrStarts: keywords.insert("STRSTARTS"); break;
        case FilterOp::kLangEquals: keywords.insert("LANG"); break;
        case FilterOp::kYearCompare: keywords.insert("YEAR"); break;
        case FilterOp::kNumericCompare: break;
      }
    }
    if (q.order_by) keywords.insert("ORDER BY");
    if (q.limit) keywords.insert("LIMIT");
  }
  s.avg_question_len = total_len / static_cast<double>(records.size());
  s.vocab_size = vocab.size();
  s.n_entities = entities.size();
  s.n_relations = relations.size();
  s.n_keywords = keywords.size();
  return s;
}

std::string RenderStats(const CorpusStats& s) {
  std::ostringstream os;
  os << "n_questions " << s.n_questions << "\n";
  os << "avg_question_len " << s.avg_question_len << "\n";
  os << "vocab_size " << s.vocab_size << "\n";
  os << "n_entities " << s.n_entities << "\n";
  os << "n_relations " << s.n_relations << "\n";
  os << "n_keywords " << s.n_keywords << "\n";
  return os.str();
}

Split SplitCorpus(const std::vector<QuestionRecord>& records,
                  const std::array<double, 3>& ratios, std::uint64_t seed) {
  if (records.empty()) throw EmptyCorpusError();
  double sum = ratios[0] + ratios[1] + ratios[2];
  for (double r : ratios) {
    if (r < 0.0 || r > 1.0) throw BadRatiosError("ratios must lie in [0, 1]");
  }
  if (std::abs(sum - 1.0) > 1e-9) throw BadRatiosError("ratios must sum to 1");

  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  // Largest remainder rounding keeps each part within one of ratio*n.
  std::size_t n = records.size();
  std::array<std::size_t, 3> sizes;
  std::array<double, 3> frac;
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    double exact = ratios[i] * static_cast<double>(n);
    sizes[i] = static_cast<std::size_t>(exact);
    frac[i] = exact - static_cast<double>(sizes[i]);
    assigned += sizes[i];
  }
  std::array<int, 3> by_frac = {0, 1, 2};
  std::stable_sort(by_frac.begin(), by_frac.end(), [&](int a, int b) { return frac[a] > frac[b]; });
  for (std::size_t k = 0; assigned < n; ++k, ++assigned) sizes[by_frac[k % 3]] += 1;

  Split out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < sizes[0]; ++i) out.train.push_back(records[order[pos++]]);
  for (std::size_t i = 0; i < sizes[1]; ++i) out.dev.push_back(records[order[pos++]]);
  for (std::size_t i = 0; i < sizes[2]; ++i) out.test.push_back(records[order[pos++]]);
  return out;
}

}  // namespace wdqa::data
