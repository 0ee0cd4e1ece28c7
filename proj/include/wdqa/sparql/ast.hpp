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

#ifndef WDQA_SPARQL_AST_H_
#define WDQA_SPARQL_AST_H_

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wdqa::sparql {

// Closed prefix set of the Wikidata query subset.
enum class Prefix { kWd, kWdt, kP, kPs, kPq };

const char* PrefixName(Prefix p);
std::optional<Prefix> PrefixFromName(std::string_view name);

// Default prefix -> full URL table; overridable from a JSON config object
// of the form {"wd": "http://...", ...}.
const std::map<std::string, std::string>& DefaultPrefixUrls();

/// A prefixed IRI such as wd:Q234691 or wdt:P101.
struct Iri {
  Prefix prefix;
  std::string local_id;  // "Q234691" / "P101"

  bool operator==(const Iri&) const = default;
  auto operator<=>(const Iri&) const = default;
};

struct Variable {
  std::string name;  // without the leading '?'

  bool operator==(const Variable&) const = default;
  auto operator<=>(const Variable&) const = default;
};

enum class LiteralTag { kNone, kLang, kNumeric, kDate };

struct Literal {
  std::string lexical;
  LiteralTag tag = LiteralTag::kNone;
  std::string lang;  // only for kLang

  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;
};

using Term = std::variant<Iri, Variable, Literal>;

struct TriplePattern {
  Term subject;
  Term predicate;
  Term object;

  bool operator==(const TriplePattern&) const = default;
};

enum class FilterOp { kContains, kStrStarts, kLangEquals, kYearCompare, kNumericCompare };
enum class Comparator { kEq, kLt, kGt, kLe, kGe };

const char* FilterOpName(FilterOp op);
const char* ComparatorName(Comparator c);

struct FilterExpr {
  FilterOp op;
  std::vector<Term> args;  // always arity 2 in this subset
  std::optional<Comparator> cmp;  // kYearCompare / kNumericCompare only

  bool operator==(const FilterExpr&) const = default;
};

enum class QueryForm { kAsk, kSelect };
enum class SortDir { kAscend, kDescend };

struct OrderBy {
  Variable var;
  SortDir dir;

  bool operator==(const OrderBy&) const = default;
};

struct Query {
  QueryForm form = QueryForm::kSelect;
  std::vector<Variable> projection;  // empty for ASK
  bool distinct = false;
  bool count = false;  // SELECT (COUNT(?x) AS ...)
  std::vector<TriplePattern> patterns;
  std::vector<FilterExpr> filters;
  std::optional<OrderBy> order_by;
  std::optional<long> limit;

  bool operator==(const Query&) const = default;
};

// Variables of q in order of first appearance: patterns (s, p, o), then
// filter arguments, then the ORDER BY variable.
std::vector<Variable> VariablesInOrder(const Query& q);

// True when the term is an Iri/Variable/Literal respectively.
bool IsIri(const Term& t);
bool IsVariable(const Term& t);
bool IsLiteral(const Term& t);

}  // namespace wdqa::sparql

#endif  // WDQA_SPARQL_AST_H_
