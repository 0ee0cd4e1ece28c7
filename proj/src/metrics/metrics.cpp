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

#include "wdqa/metrics/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wdqa/sparql/printer.hpp"
#include "wdqa/sparql/validate.hpp"

namespace wdqa::metrics {

using sparql::Query;
using sparql::QueryForm;
using sparql::SortDir;
using sparql::Term;
using sparql::Variable;

namespace {

// Renaming a query's variables to v1..vk. index is var name -> 1-based id.
using VarMap = std::map<std::string, int>;

std::string RenderWith(const Term& t, const VarMap& names) {
  if (const auto* v = std::get_if<Variable>(&t)) {
    return "?v" + std::to_string(names.at(v->name));
  }
  return sparql::RenderTerm(t);
}

std::set<std::vector<std::string>> ComponentsWith(const Query& q, const VarMap& names) {
  std::set<std::vector<std::string>> out;
  for (const auto& p : q.patterns) {
    out.insert({"triple", RenderWith(p.subject, names), RenderWith(p.predicate, names),
                RenderWith(p.object, names)});
  }
  for (const auto& f : q.filters) {
    out.insert({"filter", sparql::FilterOpName(f.op), RenderWith(f.args[0], names),
                RenderWith(f.args[1], names),
                f.cmp ? sparql::ComparatorName(*f.cmp) : ""});
  }
  if (q.form == QueryForm::kAsk) {
    out.insert({"query", "form", "ask"});
  } else {
    out.insert({"query", "form", q.count ? "count" : "select"});
    // Projection order is significant (it fixes the answer tuple layout),
    // so it forms a single ordered component.
    std::string proj;
    for (const auto& v : q.projection) {
      if (!proj.empty()) proj += " ";
      proj += RenderWith(Term(v), names);
    }
    out.insert({"query", "project", proj});
  }
  if (q.distinct) out.insert({"query", "distinct", "true"});
  if (q.limit) out.insert({"query", "limit", std::to_string(*q.limit)});
  if (q.order_by) {
    out.insert({RenderWith(Term(q.order_by->var), names), "order by",
                q.order_by->dir == SortDir::kAscend ? "ascend" : "descend"});
  }
  return out;
}

}  // namespace

std::string TripleSet::Render() const {
  std::ostringstream os;
  for (const auto& c : components) {
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ", ";
      os << c[i];
    }
    os << ")\n";
  }
  return os.str();
}

TripleSet Decompose(const Query& q) {
  if (auto diags = sparql::Validate(q); !diags.empty()) {
    throw InvalidQueryError(diags.front().Render());
  }
  std::vector<Variable> vars = sparql::VariablesInOrder(q);

  // First-appearance naming alone is not order-free: permuting the WHERE
  // clause permutes first appearances. Canonicalize by taking the smallest
  // component set over all bijective renamings instead. Queries in this
  // subset carry at most a handful of variables, so the search is cheap;
  // past 7 variables fall back to first-appearance naming.
  VarMap names;
  for (std::size_t i = 0; i < vars.size(); ++i) names[vars[i].name] = static_cast<int>(i) + 1;
  TripleSet best{ComponentsWith(q, names)};
  if (vars.size() > 1 && vars.size() <= 7) {
    std::vector<int> perm(vars.size());
    std::iota(perm.begin(), perm.end(), 1);
    do {
      VarMap candidate;
      for (std::size_t i = 0; i < vars.size(); ++i) candidate[vars[i].name] = perm[i];
      auto components = ComponentsWith(q, candidate);
      if (components < best.components) best.components = std::move(components);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

bool ExactSetMatch(const Query& pred, const Query& gold) {
  return Decompose(pred) == Decompose(gold);
}

namespace {

std::set<std::string> AnswerKeys(const kg::AnswerSet& a) {
  std::set<std::string> out;
  switch (a.kind) {
    case kg::AnswerSet::Kind::kBoolean:
      out.insert(a.boolean ? "bool:true" : "bool:false");
      break;
    case kg::AnswerSet::Kind::kCount:
      out.insert("count:" + std::to_string(a.count));
      break;
    case kg::AnswerSet::Kind::kRows:
      for (const auto& row : a.rows) {
        std::ostringstream os;
        for (const auto& t : row) os << kg::RenderGround(t) << "\t";
        out.insert(os.str());
      }
      break;
  }
  return out;
}

}  // namespace

F1Score AnswerF1(const kg::AnswerSet& pred, const kg::AnswerSet& gold) {
  std::set<std::string> p = AnswerKeys(pred), g = AnswerKeys(gold);
  if (p.empty() && g.empty()) return {1.0, 1.0, 1.0};
  std::vector<std::string> common;
  std::set_intersection(p.begin(), p.end(), g.begin(), g.end(), std::back_inserter(common));
  F1Score s;
  s.precision = p.empty() ? 0.0 : static_cast<double>(common.size()) / static_cast<double>(p.size());
  s.recall = g.empty() ? 0.0 : static_cast<double>(common.size()) / static_cast<double>(g.size());
  s.f1 = (s.precision + s.recall) > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

CorpusScores ScoreCorpus(const std::vector<EvalRecord>& records, const kg::KnowledgeGraph& kg) {
  if (records.empty()) throw data::EmptyCorpusError();
  CorpusScores out;
  out.n = records.size();
  struct Acc {
    std::size_t n = 0;
    double f1 = 0.0;
    std::size_t exact = 0;
  };
  std::map<data::QuestionType, Acc> by_type;
  double total_f1 = 0.0;
  std::size_t total_exact = 0;
  for (const auto& r : records) {
    kg::AnswerSet gold_answers = kg::Execute(kg, r.gold);
    double f1 = 0.0;
    bool exact = false;
    if (r.pred) {
      try {
        exact = ExactSetMatch(*r.pred, r.gold);
        f1 = AnswerF1(kg::Execute(kg, *r.pred), gold_answers).f1;
      } catch (const std::exception&) {
        // Invalid prediction scores zero.
        f1 = 0.0;
        exact = false;
      }
    }
    total_f1 += f1;
    total_exact += exact ? 1 : 0;
    Acc& acc = by_type[data::ClassifyQuestionType(r.gold)];
    ++acc.n;
    acc.f1 += f1;
    acc.exact += exact ? 1 : 0;
  }
  out.mean_answer_f1 = total_f1 / static_cast<double>(records.size());
  out.exact_match_rate = static_cast<double>(total_exact) / static_cast<double>(records.size());
  for (const auto& [type, acc] : by_type) {
    out.per_type[type] = {acc.n, acc.f1 / static_cast<double>(acc.n),
                          static_cast<double>(acc.exact) / static_cast<double>(acc.n)};
  }
  return out;
}

std::string RenderScores(const CorpusScores& s) {
  std::ostringstream os;
  os << "n " << s.n << "\n";
  os << "answer_f1 " << s.mean_answer_f1 << "\n";
  os << "exact_match " << s.exact_match_rate << "\n";
  for (const auto& [type, score] : s.per_type) {
    const char* name = data::QuestionTypeName(type);
    os << "type." << name << ".n " << score.n << "\n";
    os << "type." << name << ".answer_f1 " << score.mean_f1 << "\n";
    os << "type." << name << ".exact_match " << score.exact_rate << "\n";
  }
  return os.str();
}

}  // namespace wdqa::metrics
