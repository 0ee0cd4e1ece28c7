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

#include "wdqa/sparql/ast.hpp"

#include <algorithm>

namespace wdqa::sparql {

const char* PrefixName(Prefix p) {
  switch (p) {
    case Prefix::kWd: return "wd";
    case Prefix::kWdt: return "wdt";
    case Prefix::kP: return "p";
    case Prefix::kPs: return "ps";
    case Prefix::kPq: return "pq";
  }
  return "?";
}

std::optional<Prefix> PrefixFromName(std::string_view name) {
  if (name == "wd") return Prefix::kWd;
  if (name == "wdt") return Prefix::kWdt;
  if (name == "p") return Prefix::kP;
  if (name == "ps") return Prefix::kPs;
  if (name == "pq") return Prefix::kPq;
  return std::nullopt;
}

const std::map<std::string, std::string>& DefaultPrefixUrls() {
  static const std::map<std::string, std::string> kTable = {
      {"wd", "http://www.wikidata.org/entity/"},
      {"wdt", "http://www.wikidata.org/prop/direct/"},
      {"p", "http://www.wikidata.org/prop/"},
      {"ps", "http://www.wikidata.org/prop/statement/"},
      {"pq", "http://www.wikidata.org/prop/qualifier/"},
  };
  return kTable;
}

const char* FilterOpName(FilterOp op) {
  switch (op) {
    case FilterOp::kContains: return "contains";
    case FilterOp::kStrStarts: return "strstarts";
    case FilterOp::kLangEquals: return "lang";
    case FilterOp::kYearCompare: return "year";
    case FilterOp::kNumericCompare: return "cmp";
  }
  return "?";
}

const char* ComparatorName(Comparator c) {
  switch (c) {
    case Comparator::kEq: return "=";
    case Comparator::kLt: return "<";
    case Comparator::kGt: return ">";
    case Comparator::kLe: return "<=";
    case Comparator::kGe: return ">=";
  }
  return "?";
}

std::vector<Variable> VariablesInOrder(const Query& q) {
  std::vector<Variable> out;
  auto add = [&](const Term& t) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      if (std::find(out.begin(), out.end(), *v) == out.end()) out.push_back(*v);
    }
  };
  for (const auto& p : q.patterns) {
    add(p.subject);
    add(p.predicate);
    add(p.object);
  }
  for (const auto& f : q.filters) {
    for (const auto& a : f.args) add(a);
  }
  if (q.order_by) add(Term(q.order_by->var));
  return out;
}

bool IsIri(const Term& t) { return std::holds_alternative<Iri>(t); }
bool IsVariable(const Term& t) { return std::holds_alternative<Variable>(t); }
bool IsLiteral(const Term& t) { return std::holds_alternative<Literal>(t); }

}  // namespace wdqa::sparql
