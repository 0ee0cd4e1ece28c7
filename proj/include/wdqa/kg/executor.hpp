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

#ifndef WDQA_KG_EXECUTOR_H_
#define WDQA_KG_EXECUTOR_H_

#include <map>
#include <string>
#include <vector>

#include "wdqa/kg/graph.hpp"
#include "wdqa/sparql/ast.hpp"

namespace wdqa::kg {

/// Variable name -> ground term, total over the solved patterns' variables.
struct Binding {
  std::map<std::string, GroundTerm> assignments;
};

struct AnswerSet {
  enum class Kind { kBoolean, kCount, kRows };

  Kind kind = Kind::kRows;
  bool boolean = false;
  long count = 0;
  std::vector<std::vector<GroundTerm>> rows;
  bool ordered = false;  // ORDER BY present: row order is significant

  std::string Render() const;
};

struct ExecError : std::runtime_error {
  enum class Code { kUnboundOrderVariable, kUnboundFilterVariable, kInvalidQuery };
  ExecError(Code code, std::string message)
      : std::runtime_error(std::move(message)), code(code) {}
  Code code;
};

/// Per-execution notes; a filter type error drops the binding and is
/// recorded here rather than failing the query.
struct ExecDiagnostics {
  std::size_t dropped_bindings = 0;
  std::vector<std::string> notes;
};

/// All bindings sigma with sigma(patterns) a subset of kg. Empty pattern
/// list yields the single empty binding. Backtracking join, most selective
/// pattern first.
std::vector<Binding> MatchPatterns(const KnowledgeGraph& kg,
                                   const std::vector<sparql::TriplePattern>& patterns);

/// Evaluates one filter under a total binding. A type mismatch (e.g. YEAR
/// of a non-date) returns false and sets *type_error. Throws on unbound
/// filter variables.
bool EvalFilter(const sparql::FilterExpr& f, const Binding& b, bool* type_error = nullptr);

/// Executes a validated query. Result pipeline for SELECT: filters, then
/// projection, then DISTINCT (keeping the smallest sort key per tuple),
/// then ORDER BY (descending flips the key comparison; ties always break
/// ascending on the tuple rendering; without ORDER BY rows sort by
/// rendering), then LIMIT. COUNT counts distinct values of the counted
/// variable.
AnswerSet Execute(const KnowledgeGraph& kg, const sparql::Query& q,
                  ExecDiagnostics* diag = nullptr);

}  // namespace wdqa::kg

#endif  // WDQA_KG_EXECUTOR_H_
