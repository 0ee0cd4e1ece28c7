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

#include "wdqa/sparql/validate.hpp"

#include <algorithm>
#include <cctype>

#include "wdqa/sparql/printer.hpp"

namespace wdqa::sparql {

namespace {

bool IdWellFormed(const Iri& iri) {
  char want = (iri.prefix == Prefix::kWd) ? 'Q' : 'P';
  const std::string& id = iri.local_id;
  if (id.size() < 2 || id[0] != want) return false;
  return std::all_of(id.begin() + 1, id.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void CheckTerm(const Term& t, const std::string& where, std::vector<Diagnostic>& out) {
  if (const auto* iri = std::get_if<Iri>(&t)) {
    if (!IdWellFormed(*iri)) {
      out.push_back({"bad-iri-id", "local id does not match the prefix's id kind",
                     where + " " + RenderIri(*iri)});
    }
  } else if (const auto* var = std::get_if<Variable>(&t)) {
    if (var->name.empty()) {
      out.push_back({"empty-variable", "variable name must be nonempty", where});
    }
  } else {
    const auto& lit = std::get<Literal>(t);
    if (lit.tag == LiteralTag::kLang && lit.lang.empty()) {
      out.push_back({"empty-variable", "language tag must be nonempty", where});
    }
  }
}

}  // namespace

std::vector<Diagnostic> Validate(const Query& q) {
  std::vector<Diagnostic> out;

  for (std::size_t i = 0; i < q.patterns.size(); ++i) {
    const auto& p = q.patterns[i];
    std::string where = "pattern " + std::to_string(i + 1);
    CheckTerm(p.subject, where + " subject", out);
    CheckTerm(p.predicate, where + " predicate", out);
    CheckTerm(p.object, where + " object", out);
    if (const auto* iri = std::get_if<Iri>(&p.predicate)) {
      if (iri->prefix == Prefix::kWd) {
        out.push_back({"bad-predicate", "predicate prefix must be wdt/p/ps/pq",
                       where + " " + RenderIri(*iri)});
      }
    } else if (IsLiteral(p.predicate)) {
      out.push_back({"bad-predicate", "predicate must be an IRI or a variable", where});
    }
  }

  for (std::size_t i = 0; i < q.filters.size(); ++i) {
    const auto& f = q.filters[i];
    std::string where = "filter " + std::to_string(i + 1);
    if (f.args.size() != 2) {
      out.push_back({"filter-arity", "filter takes exactly two arguments", where});
      continue;
    }
    for (const auto& a : f.args) CheckTerm(a, where, out);
    bool needs_cmp = f.op == FilterOp::kYearCompare || f.op == FilterOp::kNumericCompare;
    if (needs_cmp != f.cmp.has_value()) {
      out.push_back({"filter-arity", "comparator presence does not match the operator", where});
    }
  }

  auto bound = [&](const Variable& v) {
    for (const auto& p : q.patterns) {
      for (const Term* t : {&p.subject, &p.predicate, &p.object}) {
        if (const auto* pv = std::get_if<Variable>(t); pv && *pv == v) return true;
      }
    }
    for (const auto& f : q.filters) {
      for (const auto& a : f.args) {
        if (const auto* pv = std::get_if<Variable>(&a); pv && *pv == v) return true;
      }
    }
    return false;
  };

  if (q.form == QueryForm::kAsk) {
    if (!q.projection.empty()) {
      out.push_back({"modifier-on-ask", "ASK query must have an empty projection", "projection"});
    }
    if (q.order_by) out.push_back({"modifier-on-ask", "ASK query cannot have ORDER BY", "order by"});
    if (q.limit) out.push_back({"modifier-on-ask", "ASK query cannot have LIMIT", "limit"});
    if (q.distinct || q.count) {
      out.push_back({"modifier-on-ask", "ASK query cannot have DISTINCT/COUNT", "form"});
    }
  } else {
    if (q.projection.empty()) {
      out.push_back({"empty-projection", "SELECT requires at least one projected variable",
                     "projection"});
    }
    if (q.count && q.projection.size() != 1) {
      out.push_back({"count-arity", "COUNT requires exactly one projected variable", "projection"});
    }
    for (const auto& v : q.projection) {
      if (v.name.empty()) {
        out.push_back({"empty-variable", "variable name must be nonempty", "projection"});
      } else if (!bound(v)) {
        out.push_back({"unbound-projection",
                       "projected variable does not occur in patterns or filters", "?" + v.name});
      }
    }
  }

  if (q.limit && *q.limit <= 0) {
    out.push_back({"bad-limit", "LIMIT must be positive", "limit"});
  }

  return out;
}

}  // namespace wdqa::sparql
