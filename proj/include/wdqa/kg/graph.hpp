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

#ifndef WDQA_KG_GRAPH_H_
#define WDQA_KG_GRAPH_H_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdqa/sparql/ast.hpp"

namespace wdqa::kg {

using sparql::Iri;
using sparql::Literal;

/// A ground term: IRI or literal, never a variable.
using GroundTerm = std::variant<Iri, Literal>;

std::string RenderGround(const GroundTerm& t);
sparql::Term ToTerm(const GroundTerm& t);
std::optional<GroundTerm> ToGround(const sparql::Term& t);

/// Total deterministic order: numerics first (by value), then dates
/// (by year/month/day), then other literals (by code point), then IRIs.
/// Ties break on the canonical rendering.
int CompareGround(const GroundTerm& a, const GroundTerm& b);

/// "YYYY-MM-DD" -> (year, month, day).
std::optional<std::array<int, 3>> ParseDate(const std::string& lexical);

struct Triple {
  GroundTerm subject;
  Iri predicate;
  GroundTerm object;

  bool operator==(const Triple&) const = default;
  std::string Render() const;
};

struct LineParseError : std::runtime_error {
  LineParseError(std::size_t line, std::string message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
  std::size_t line;
};

/// Immutable-after-load in-memory triple set with per-language labels.
/// Read access is safe from any number of threads once loading is done.
class KnowledgeGraph {
 public:
  /// Inserts a triple; duplicates collapse. Returns false on duplicate.
  bool Add(Triple t);

  bool Has(const Triple& t) const { return keys_.count(t.Render()) > 0; }
  const std::vector<Triple>& triples() const { return triples_; }

  void SetLabel(const Iri& iri, const std::string& lang, const std::string& label);
  std::optional<std::string> Label(const Iri& iri, const std::string& lang) const;

  /// Statement-node discipline: subjects of ps:/pq: triples must appear as
  /// objects of some p: triple. Violations are warnings, not failures.
  std::vector<std::string> QualifierWarnings() const;

  /// All distinct ground terms occurring in any triple position (subject,
  /// object) plus predicates as IRIs. Sorted by rendering.
  std::vector<GroundTerm> AllTerms() const;

 private:
  std::vector<Triple> triples_;
  std::set<std::string> keys_;
  std::map<Iri, std::map<std::string, std::string>> labels_;
};

/// Parses line-oriented triples: `subject predicate object .` per line,
/// `#` comments, blank lines allowed. Throws LineParseError. Warnings
/// (qualifier discipline) are appended to `warnings` when non-null.
KnowledgeGraph LoadGraph(const std::string& source, std::vector<std::string>* warnings = nullptr);

/// Label sidecar: lines `iri lang label text...`.
void LoadLabels(const std::string& source, KnowledgeGraph& kg);

}  // namespace wdqa::kg

#endif  // WDQA_KG_GRAPH_H_
