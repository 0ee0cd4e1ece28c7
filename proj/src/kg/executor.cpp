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

#include "wdqa/kg/executor.hpp"

#include <algorithm>
#include <sstream>

#include "wdqa/sparql/printer.hpp"
#include "wdqa/sparql/validate.hpp"
#include "wdqa/text.hpp"

namespace wdqa::kg {

using sparql::Comparator;
using sparql::FilterExpr;
using sparql::FilterOp;
using sparql::LiteralTag;
using sparql::Query;
using sparql::QueryForm;
using sparql::SortDir;
using sparql::Term;
using sparql::TriplePattern;
using sparql::Variable;

std::string AnswerSet::Render() const {
  switch (kind) {
    case Kind::kBoolean:
      return boolean ? "true" : "false";
    case Kind::kCount:
      return std::to_string(count);
    case Kind::kRows: {
      std::ostringstream os;
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) os << "\t";
          os << RenderGround(row[i]);
        }
        os << "\n";
      }
      return os.str();
    }
  }
  return "";
}

namespace {

// Resolves a pattern position under a partial binding: ground term, or
// nullopt when the position is an unbound variable.
std::optional<GroundTerm> Resolve(const Term& t, const Binding& b) {
  if (const auto* v = std::get_if<Variable>(&t)) {
    auto it = b.assignments.find(v->name);
    if (it == b.assignments.end()) return std::nullopt;
    return it->second;
  }
  return ToGround(t);
}

bool SameGround(const GroundTerm& a, const GroundTerm& b) {
  return ToTerm(a) == ToTerm(b);
}

// Number of positions already ground or bound; more is more selective.
int Selectivity(const TriplePattern& p, const Binding& b) {
  int n = 0;
  for (const Term* t : {&p.subject, &p.predicate, &p.object}) {
    if (Resolve(*t, b)) ++n;
  }
  return n;
}

void Join(const KnowledgeGraph& kg, std::vector<const TriplePattern*> remaining,
          Binding current, std::vector<Binding>& out) {
  if (remaining.empty()) {
    out.push_back(std::move(current));
    return;
  }
  auto best = std::max_element(remaining.begin(), remaining.end(),
                               [&](const TriplePattern* a, const TriplePattern* b) {
                                 return Selectivity(*a, current) < Selectivity(*b, current);
                               });
  const TriplePattern* p = *best;
  remaining.erase(best);

  auto rs = Resolve(p->subject, current);
  auto rp = Resolve(p->predicate, current);
  auto ro = Resolve(p->object, current);
  for (const Triple& t : kg.triples()) {
    if (rs && !SameGround(*rs, t.subject)) continue;
    if (rp && !SameGround(*rp, GroundTerm(t.predicate))) continue;
    if (ro && !SameGround(*ro, t.object)) continue;
    Binding next = current;
    auto bind = [&](const Term& term, const GroundTerm& value) {
      if (const auto* v = std::get_if<Variable>(&term)) {
        auto it = next.assignments.find(v->name);
        if (it == next.assignments.end()) {
          next.assignments.emplace(v->name, value);
          return true;
        }
        return SameGround(it->second, value);  // repeated variable in one pattern
      }
      return true;
    };
    if (!rs && !bind(p->subject, t.subject)) continue;
    if (!rp && !bind(p->predicate, GroundTerm(t.predicate))) continue;
    if (!ro && !bind(p->object, t.object)) continue;
    Join(kg, remaining, std::move(next), out);
  }
}

GroundTerm Require(const Term& t, const Binding& b) {
  auto r = Resolve(t, b);
  if (!r) {
    const auto* v = std::get_if<Variable>(&t);
    throw ExecError(ExecError::Code::kUnboundFilterVariable,
                    "unbound filter variable ?" + (v ? v->name : std::string()));
  }
  return *r;
}

const Literal* AsLiteral(const GroundTerm& t) { return std::get_if<Literal>(&t); }

bool ApplyCmp(Comparator c, double lhs, double rhs) {
  switch (c) {
    case Comparator::kEq: return lhs == rhs;
    case Comparator::kLt: return lhs < rhs;
    case Comparator::kGt: return lhs > rhs;
    case Comparator::kLe: return lhs <= rhs;
    case Comparator::kGe: return lhs >= rhs;
  }
  return false;
}

std::optional<double> NumericValue(const Literal& lit) {
  if (lit.tag != LiteralTag::kNumeric) return std::nullopt;
  try {
    return std::stod(lit.lexical);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<Binding> MatchPatterns(const KnowledgeGraph& kg,
                                   const std::vector<TriplePattern>& patterns) {
  std::vector<const TriplePattern*> ptrs;
  ptrs.reserve(patterns.size());
  for (const auto& p : patterns) ptrs.push_back(&p);
  std::vector<Binding> out;
  Join(kg, std::move(ptrs), Binding{}, out);
  return out;
}

bool EvalFilter(const FilterExpr& f, const Binding& b, bool* type_error) {
  auto fail_type = [&] {
    if (type_error) *type_error = true;
    return false;
  };
  GroundTerm a0 = Require(f.args[0], b);
  GroundTerm a1 = Require(f.args[1], b);
  const Literal* l0 = AsLiteral(a0);
  const Literal* l1 = AsLiteral(a1);
  switch (f.op) {
    case FilterOp::kContains:
      if (!l0 || !l1) return fail_type();
      return text::Contains(l0->lexical, l1->lexical);
    case FilterOp::kStrStarts:
      if (!l0 || !l1) return fail_type();
      return text::StartsWith(l0->lexical, l1->lexical);
    case FilterOp::kLangEquals:
      if (!l0 || !l1) return fail_type();
      return l0->lang == l1->lexical;
    case FilterOp::kYearCompare: {
      if (!l0 || l0->tag != LiteralTag::kDate || !l1) return fail_type();
      auto date = ParseDate(l0->lexical);
      auto rhs = NumericValue(*l1);
      if (!date || !rhs) return fail_type();
      return ApplyCmp(*f.cmp, (*date)[0], *rhs);
    }
    case FilterOp::kNumericCompare: {
      if (!l0 || !l1) return fail_type();
      auto lhs = NumericValue(*l0);
      auto rhs = NumericValue(*l1);
      if (!lhs || !rhs) return fail_type();
      return ApplyCmp(*f.cmp, *lhs, *rhs);
    }
  }
  return fail_type();
}

AnswerSet Execute(const KnowledgeGraph& kg, const Query& q, ExecDiagnostics* diag) {
  if (auto diags = sparql::Validate(q); !diags.empty()) {
    throw ExecError(ExecError::Code::kInvalidQuery, diags.front().Render());
  }

  std::vector<Binding> bindings = MatchPatterns(kg, q.patterns);

  std::vector<Binding> kept;
  kept.reserve(bindings.size());
  for (auto& b : bindings) {
    bool ok = true;
    for (const auto& f : q.filters) {
      bool type_error = false;
      if (!EvalFilter(f, b, &type_error)) {
        ok = false;
        if (type_error && diag) {
          ++diag->dropped_bindings;
          diag->notes.push_back("TypeErrorInFilter: " + sparql::RenderFilter(f));
        }
        break;
      }
    }
    if (ok) kept.push_back(std::move(b));
  }

  AnswerSet result;
  if (q.form == QueryForm::kAsk) {
    result.kind = AnswerSet::Kind::kBoolean;
    result.boolean = !kept.empty();
    return result;
  }

  if (q.count) {
    std::set<std::string> values;
    for (const auto& b : kept) {
      auto it = b.assignments.find(q.projection.front().name);
      if (it != b.assignments.end()) values.insert(RenderGround(it->second));
    }
    result.kind = AnswerSet::Kind::kCount;
    result.count = static_cast<long>(values.size());
    return result;
  }

  // Project, carrying the sort key alongside each tuple.
  struct Entry {
    std::vector<GroundTerm> tuple;
    std::optional<GroundTerm> key;
    std::string tuple_render;
  };
  std::vector<Entry> entries;
  for (const auto& b : kept) {
    Entry e;
    for (const auto& v : q.projection) {
      auto it = b.assignments.find(v.name);
      if (it == b.assignments.end()) {
        // Projection validated as bound; an unfilled slot can only come from
        // a variable bound solely in filters, which cannot bind values.
        throw ExecError(ExecError::Code::kInvalidQuery,
                        "projected variable ?" + v.name + " has no value");
      }
      e.tuple.push_back(it->second);
    }
    if (q.order_by) {
      auto it = b.assignments.find(q.order_by->var.name);
      if (it == b.assignments.end()) {
        throw ExecError(ExecError::Code::kUnboundOrderVariable,
                        "unbound ORDER BY variable ?" + q.order_by->var.name);
      }
      e.key = it->second;
    }
    std::ostringstream os;
    for (const auto& t : e.tuple) os << RenderGround(t) << "\t";
    e.tuple_render = os.str();
    entries.push_back(std::move(e));
  }

  if (q.distinct) {
    std::map<std::string, Entry> uniq;
    for (auto& e : entries) {
      auto it = uniq.find(e.tuple_render);
      if (it == uniq.end()) {
        uniq.emplace(e.tuple_render, std::move(e));
      } else if (e.key && it->second.key && CompareGround(*e.key, *it->second.key) < 0) {
        it->second = std::move(e);  // smallest key represents the tuple
      }
    }
    entries.clear();
    for (auto& [render, e] : uniq) entries.push_back(std::move(e));
  }

  bool descend = q.order_by && q.order_by->dir == SortDir::kDescend;
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    if (a.key && b.key) {
      int c = CompareGround(*a.key, *b.key);
      if (c != 0) return descend ? c > 0 : c < 0;
    }
    return a.tuple_render < b.tuple_render;
  });

  if (q.limit && static_cast<std::size_t>(*q.limit) < entries.size()) {
    entries.resize(static_cast<std::size_t>(*q.limit));
  }

  result.kind = AnswerSet::Kind::kRows;
  result.ordered = q.order_by.has_value();
  for (auto& e : entries) result.rows.push_back(std::move(e.tuple));
  return result;
}

}  // namespace wdqa::kg
