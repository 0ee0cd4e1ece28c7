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

// Random well-formed queries and graphs for property tests.

#ifndef WDQA_TESTS_GENERATORS_H_
#define WDQA_TESTS_GENERATORS_H_

#include <random>
#include <set>
#include <string>
#include <vector>

#include "wdqa/kg/graph.hpp"
#include "wdqa/sparql/ast.hpp"

namespace wdqa::testgen {

using sparql::Comparator;
using sparql::FilterExpr;
using sparql::FilterOp;
using sparql::Iri;
using sparql::Literal;
using sparql::LiteralTag;
using sparql::Prefix;
using sparql::Query;
using sparql::QueryForm;
using sparql::SortDir;
using sparql::Term;
using sparql::TriplePattern;
using sparql::Variable;

using Rng = std::mt19937_64;

inline int Pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }
inline bool Coin(Rng& rng, double p = 0.5) {
  return std::uniform_real_distribution<double>(0, 1)(rng) < p;
}

inline Iri RandomEntity(Rng& rng, int n = 12) {
  return {Prefix::kWd, "Q" + std::to_string(1 + Pick(rng, n))};
}

inline Iri RandomRelation(Rng& rng) {
  switch (Pick(rng, 4)) {
    case 0:
      return {Prefix::kWdt, "P" + std::to_string(1 + Pick(rng, 5))};
    case 1:
      return {Prefix::kP, "P" + std::to_string(6 + Pick(rng, 2))};
    case 2:
      return {Prefix::kPs, "P" + std::to_string(6 + Pick(rng, 2))};
    default:
      return {Prefix::kPq, "P" + std::to_string(8 + Pick(rng, 2))};
  }
}

inline Literal RandomLiteral(Rng& rng) {
  switch (Pick(rng, 4)) {
    case 0:
      return {std::to_string(Pick(rng, 30)), LiteralTag::kNumeric, ""};
    case 1: {
      int y = 1900 + Pick(rng, 130);
      return {std::to_string(y) + "-0" + std::to_string(1 + Pick(rng, 9)) + "-1" +
                  std::to_string(Pick(rng, 9)),
              LiteralTag::kDate, ""};
    }
    case 2:
      return {std::string("name") + char('a' + Pick(rng, 5)), LiteralTag::kLang,
              Coin(rng) ? "zh" : "en"};
    default:
      return {std::string("txt") + char('a' + Pick(rng, 5)), LiteralTag::kNone, ""};
  }
}

/// A valid query over a fixed small vocabulary: every projection / filter /
/// sort variable is bound by a pattern, predicates are property IRIs.
inline Query RandomQuery(Rng& rng, int max_vars = 4, int max_patterns = 3) {
  static const std::vector<std::string> kVarNames = {"a", "b", "c", "d", "e", "f", "obj"};
  Query q;

  const int n_vars = 1 + Pick(rng, max_vars);
  std::vector<Variable> vars;
  for (int i = 0; i < n_vars; ++i) vars.push_back({kVarNames[i]});

  const int n_patterns = 1 + Pick(rng, max_patterns);
  std::set<std::string> bound;
  for (int i = 0; i < n_patterns; ++i) {
    TriplePattern p;
    // Subject: variable or entity; keep at least one variable somewhere.
    if (Coin(rng, 0.6)) {
      const Variable& v = vars[Pick(rng, n_vars)];
      p.subject = v;
      bound.insert(v.name);
    } else {
      p.subject = RandomEntity(rng);
    }
    p.predicate = Coin(rng, 0.15) ? Term(vars[Pick(rng, n_vars)]) : Term(RandomRelation(rng));
    if (auto* pv = std::get_if<Variable>(&p.predicate)) bound.insert(pv->name);
    if (Coin(rng, 0.55)) {
      const Variable& v = vars[Pick(rng, n_vars)];
      p.object = v;
      bound.insert(v.name);
    } else if (Coin(rng, 0.7)) {
      p.object = RandomEntity(rng);
    } else {
      p.object = RandomLiteral(rng);
    }
    q.patterns.push_back(std::move(p));
  }
  if (bound.empty()) {
    Variable v = vars[0];
    q.patterns[0].subject = v;
    bound.insert(v.name);
  }
  std::vector<Variable> bound_vars;
  for (const auto& name : bound) bound_vars.push_back({name});
  auto bound_var = [&](Rng& r) { return bound_vars[Pick(r, (int)bound_vars.size())]; };

  if (Coin(rng, 0.25)) {
    q.form = QueryForm::kAsk;
  } else {
    q.form = QueryForm::kSelect;
    if (Coin(rng, 0.3)) {
      q.count = true;
      q.distinct = Coin(rng, 0.4);
      q.projection = {bound_var(rng)};
    } else {
      q.distinct = Coin(rng, 0.3);
      std::set<std::string> proj;
      const int n_proj = 1 + Pick(rng, 2);
      for (int i = 0; i < n_proj; ++i) proj.insert(bound_var(rng).name);
      for (const auto& name : proj) q.projection.push_back({name});
    }

    const int n_filters = Coin(rng, 0.35) ? 1 + Pick(rng, 2) : 0;
    for (int i = 0; i < n_filters; ++i) {
      FilterExpr f;
      switch (Pick(rng, 5)) {
        case 0:
          f.op = FilterOp::kContains;
          f.args = {bound_var(rng), Literal{"am", LiteralTag::kNone, ""}};
          break;
        case 1:
          f.op = FilterOp::kStrStarts;
          f.args = {bound_var(rng), Literal{"na", LiteralTag::kNone, ""}};
          break;
        case 2:
          f.op = FilterOp::kLangEquals;
          f.args = {bound_var(rng), Literal{Coin(rng) ? "zh" : "en", LiteralTag::kNone, ""}};
          break;
        case 3:
          f.op = FilterOp::kYearCompare;
          f.args = {bound_var(rng),
                    Literal{std::to_string(1900 + Pick(rng, 130)), LiteralTag::kNumeric, ""}};
          f.cmp = static_cast<Comparator>(Pick(rng, 5));
          break;
        default:
          f.op = FilterOp::kNumericCompare;
          f.args = {bound_var(rng), Literal{std::to_string(Pick(rng, 30)), LiteralTag::kNumeric, ""}};
          f.cmp = static_cast<Comparator>(Pick(rng, 5));
          break;
      }
      q.filters.push_back(std::move(f));
    }
    if (Coin(rng, 0.35)) {
      q.order_by = sparql::OrderBy{bound_var(rng), Coin(rng) ? SortDir::kAscend : SortDir::kDescend};
    }
    if (Coin(rng, 0.35)) q.limit = 1 + Pick(rng, 5);
  }
  return q;
}

/// A graph over the same vocabulary, with statement-node discipline for the
/// p:/ps:/pq: properties so qualifier queries can match.
inline kg::KnowledgeGraph RandomGraph(Rng& rng, int max_triples = 200) {
  kg::KnowledgeGraph g;
  const int n = 20 + Pick(rng, max_triples - 20);
  int statement = 0;
  for (int i = 0; i < n; ++i) {
    if (Coin(rng, 0.3)) {
      // Statement node: p: into a fresh node, ps: value, sometimes pq:.
      Iri node{Prefix::kWd, "Q" + std::to_string(900 + statement++)};
      Iri prop{Prefix::kP, "P" + std::to_string(6 + Pick(rng, 2))};
      g.Add({RandomEntity(rng), prop, node});
      g.Add({node, Iri{Prefix::kPs, prop.local_id}, Coin(rng, 0.7)
                                                        ? kg::GroundTerm(RandomEntity(rng))
                                                        : kg::GroundTerm(RandomLiteral(rng))});
      if (Coin(rng, 0.6)) {
        g.Add({node, Iri{Prefix::kPq, "P" + std::to_string(8 + Pick(rng, 2))},
               Coin(rng, 0.5) ? kg::GroundTerm(RandomLiteral(rng))
                              : kg::GroundTerm(RandomEntity(rng))});
      }
    } else {
      Iri prop{Prefix::kWdt, "P" + std::to_string(1 + Pick(rng, 5))};
      g.Add({RandomEntity(rng), prop, Coin(rng, 0.6) ? kg::GroundTerm(RandomEntity(rng))
                                                     : kg::GroundTerm(RandomLiteral(rng))});
    }
  }
  return g;
}

// Shuffles component order and applies a random variable bijection.
inline Query Scramble(const Query& q, testgen::Rng& rng) {
  Query out = q;
  std::shuffle(out.patterns.begin(), out.patterns.end(), rng);
  std::shuffle(out.filters.begin(), out.filters.end(), rng);

  std::vector<Variable> vars = VariablesInOrder(out);
  std::vector<std::string> names;
  for (const auto& v : vars) names.push_back(v.name);
  std::vector<std::string> renamed;
  for (std::size_t i = 0; i < names.size(); ++i) renamed.push_back("r" + std::to_string(i));
  std::shuffle(renamed.begin(), renamed.end(), rng);
  std::map<std::string, std::string> mapping;
  for (std::size_t i = 0; i < names.size(); ++i) mapping[names[i]] = renamed[i];

  auto rename_term = [&](Term& t) {
    if (auto* v = std::get_if<Variable>(&t)) v->name = mapping.at(v->name);
  };
  for (auto& p : out.patterns) {
    rename_term(p.subject);
    rename_term(p.predicate);
    rename_term(p.object);
  }
  for (auto& f : out.filters) {
    for (auto& a : f.args) rename_term(a);
  }
  for (auto& v : out.projection) v.name = mapping.at(v.name);
  if (out.order_by) out.order_by->var.name = mapping.at(out.order_by->var.name);
  return out;
}


}  // namespace wdqa::testgen

#endif  // WDQA_TESTS_GENERATORS_H_
