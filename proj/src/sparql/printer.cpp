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

#include "wdqa/sparql/printer.hpp"

#include <sstream>

namespace wdqa::sparql {

namespace {

std::string EscapeLexical(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string RenderIri(const Iri& iri) {
  return std::string(PrefixName(iri.prefix)) + ":" + iri.local_id;
}

std::string RenderTerm(const Term& t) {
  if (const auto* iri = std::get_if<Iri>(&t)) return RenderIri(*iri);
  if (const auto* var = std::get_if<Variable>(&t)) return "?" + var->name;
  const auto& lit = std::get<Literal>(t);
  switch (lit.tag) {
    case LiteralTag::kNumeric:
      return lit.lexical;
    case LiteralTag::kLang:
      return "\"" + EscapeLexical(lit.lexical) + "\"@" + lit.lang;
    case LiteralTag::kDate:
      return "\"" + EscapeLexical(lit.lexical) + "\"^^date";
    case LiteralTag::kNone:
      return "\"" + EscapeLexical(lit.lexical) + "\"";
  }
  return "";
}

std::string RenderFilter(const FilterExpr& f) {
  std::ostringstream os;
  os << "FILTER(";
  switch (f.op) {
    case FilterOp::kContains:
      os << "CONTAINS(" << RenderTerm(f.args[0]) << ", " << RenderTerm(f.args[1]) << ")";
      break;
    case FilterOp::kStrStarts:
      os << "STRSTARTS(" << RenderTerm(f.args[0]) << ", " << RenderTerm(f.args[1]) << ")";
      break;
    case FilterOp::kLangEquals:
      os << "LANG(" << RenderTerm(f.args[0]) << ") = " << RenderTerm(f.args[1]);
      break;
    case FilterOp::kYearCompare:
      os << "YEAR(" << RenderTerm(f.args[0]) << ") " << ComparatorName(*f.cmp) << " "
         << RenderTerm(f.args[1]);
      break;
    case FilterOp::kNumericCompare:
      os << RenderTerm(f.args[0]) << " " << ComparatorName(*f.cmp) << " "
         << RenderTerm(f.args[1]);
      break;
  }
  os << ")";
  return os.str();
}

std::string PrintQuery(const Query& q) {
  std::ostringstream os;
  if (q.form == QueryForm::kAsk) {
    os << "ASK";
  } else {
    os << "SELECT";
    if (q.count) {
      os << " (COUNT(";
      if (q.distinct) os << "DISTINCT ";
      os << "?" << q.projection.front().name << ") AS ?cnt)";
    } else {
      if (q.distinct) os << " DISTINCT";
      for (const auto& v : q.projection) os << " ?" << v.name;
    }
  }
  os << " WHERE {";
  bool first = true;
  for (const auto& p : q.patterns) {
    os << (first ? " " : " . ") << RenderTerm(p.subject) << " " << RenderTerm(p.predicate)
       << " " << RenderTerm(p.object);
    first = false;
  }
  for (const auto& f : q.filters) {
    os << (first ? " " : " . ") << RenderFilter(f);
    first = false;
  }
  os << " }";
  if (q.order_by) {
    os << " ORDER BY " << (q.order_by->dir == SortDir::kAscend ? "ASC" : "DESC") << "(?"
       << q.order_by->var.name << ")";
  }
  if (q.limit) os << " LIMIT " << *q.limit;
  return os.str();
}

std::string ExpandIri(const Iri& iri, const std::map<std::string, std::string>& prefix_urls) {
  auto it = prefix_urls.find(PrefixName(iri.prefix));
  const std::string& base = it != prefix_urls.end() ? it->second : "";
  return "<" + base + iri.local_id + ">";
}

}  // namespace wdqa::sparql
