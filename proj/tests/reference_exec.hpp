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

// Reference executor: exhaustive pattern-to-triple assignment in written
// order, with filters and the result pipeline re-implemented from their
// definitions. Used to cross-check the production executor.

#ifndef WDQA_TESTS_REFERENCE_EXEC_H_
#define WDQA_TESTS_REFERENCE_EXEC_H_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wdqa/kg/graph.hpp"
#include "wdqa/sparql/ast.hpp"

namespace wdqa::testref {

using namespace wdqa::sparql;
using kg::CompareGround;
using kg::GroundTerm;
using kg::KnowledgeGraph;
using kg::RenderGround;
using kg::ToGround;
using kg::Triple;

using Assignment = std::map<std::string, GroundTerm>;

inline bool UnifyTerm(const Term& pat, const GroundTerm& value, Assignment& a) {
  if (const auto* v = std::get_if<Variable>(&pat)) {
    auto it = a.find(v->name);
    if (it == a.end()) {
      a.emplace(v->name, value);
      return true;
    }
    return RenderGround(it->second) == RenderGround(value);
  }
  auto g = ToGround(pat);
  return g && RenderGround(*g) == RenderGround(value);
}

inline void EnumerateMatches(const KnowledgeGraph& g, const std::vector<TriplePattern>& patterns,
                      std::size_t index, Assignment current, std::vector<Assignment>& out) {
  if (index == patterns.size()) {
    out.push_back(std::move(current));
    return;
  }
  const TriplePattern& p = patterns[index];
  for (const Triple& t : g.triples()) {
    Assignment next = current;
    if (!UnifyTerm(p.subject, t.subject, next)) continue;
    if (!UnifyTerm(p.predicate, GroundTerm(t.predicate), next)) continue;
    if (!UnifyTerm(p.object, t.object, next)) continue;
    EnumerateMatches(g, patterns, index + 1, std::move(next), out);
  }
}

inline bool RefFilter(const FilterExpr& f, const Assignment& a) {
  auto value = [&](const Term& t) -> GroundTerm {
    if (const auto* v = std::get_if<Variable>(&t)) return a.at(v->name);
    return *ToGround(t);
  };
  const GroundTerm g0 = value(f.args[0]);
  const GroundTerm g1 = value(f.args[1]);
  const Literal* l0 = std::get_if<Literal>(&g0);
  const Literal* l1 = std::get_if<Literal>(&g1);
  if (!l0 || !l1) return false;
  auto num = [](const Literal& l) -> std::optional<double> {
    if (l.tag != LiteralTag::kNumeric) return std::nullopt;
    try {
      return std::stod(l.lexical);
    } catch (...) {
      return std::nullopt;
    }
  };
  auto cmp = [&](double lhs, double rhs) {
    switch (*f.cmp) {
      case Comparator::kEq: return lhs == rhs;
      case Comparator::kLt: return lhs < rhs;
      case Comparator::kGt: return lhs > rhs;
      case Comparator::kLe: return lhs <= rhs;
      case Comparator::kGe: return lhs >= rhs;
    }
    return false;
  };
  switch (f.op) {
    case FilterOp::kContains:
      return l0->lexical.find(l1->lexical) != std::string::npos;
    case FilterOp::kStrStarts:
      return l0->lexical.rfind(l1->lexical, 0) == 0;
    case FilterOp::kLangEquals:
      return l0->lang == l1->lexical;
    case FilterOp::kYearCompare: {
      if (l0->tag != LiteralTag::kDate || l0->lexical.size() < 4) return false;
      auto rhs = num(*l1);
      if (!rhs) return false;
      return cmp(std::stod(l0->lexical.substr(0, 4)), *rhs);
    }
    case FilterOp::kNumericCompare: {
      auto lhs = num(*l0);
      auto rhs = num(*l1);
      if (!lhs || !rhs) return false;
      return cmp(*lhs, *rhs);
    }
  }
  return false;
}

inline std::string RefExecute(const KnowledgeGraph& g, const Query& q) {
  std::vector<Assignment> all;
  EnumerateMatches(g, q.patterns, 0, {}, all);
  std::vector<Assignment> kept;
  for (const auto& a : all) {
    bool ok = true;
    for (const auto& f : q.filters) ok = ok && RefFilter(f, a);
    if (ok) kept.push_back(a);
  }

  if (q.form == QueryForm::kAsk) return kept.empty() ? "false" : "true";

  if (q.count) {
    std::set<std::string> values;
    for (const auto& a : kept) values.insert(RenderGround(a.at(q.projection[0].name)));
    return std::to_string(values.size());
  }

  struct Row {
    std::string render;
    std::optional<GroundTerm> key;
  };
  std::vector<Row> rows;
  for (const auto& a : kept) {
    Row r;
    std::ostringstream os;
    for (const auto& v : q.projection) os << RenderGround(a.at(v.name)) << "\t";
    std::string with_tabs = os.str();
    r.render = with_tabs.substr(0, with_tabs.size() - 1);
    if (q.order_by) r.key = a.at(q.order_by->var.name);
    rows.push_back(std::move(r));
  }

  if (q.distinct) {
    std::map<std::string, Row> uniq;
    for (auto& r : rows) {
      auto it = uniq.find(r.render);
      if (it == uniq.end()) {
        uniq.emplace(r.render, std::move(r));
      } else if (r.key && it->second.key && CompareGround(*r.key, *it->second.key) < 0) {
        it->second = std::move(r);
      }
    }
    rows.clear();
    for (auto& [render, r] : uniq) rows.push_back(std::move(r));
  }

  const bool descend = q.order_by && q.order_by->dir == SortDir::kDescend;
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& x, const Row& y) {
    if (x.key && y.key) {
      int c = CompareGround(*x.key, *y.key);
      if (c != 0) return descend ? c > 0 : c < 0;
    }
    return x.render < y.render;
  });
  if (q.limit && static_cast<std::size_t>(*q.limit) < rows.size()) {
    rows.resize(static_cast<std::size_t>(*q.limit));
  }

  std::ostringstream os;
  for (const auto& r : rows) os << r.render << "\n";
  return os.str();
}


}  // namespace wdqa::testref

#endif  // WDQA_TESTS_REFERENCE_EXEC_H_
