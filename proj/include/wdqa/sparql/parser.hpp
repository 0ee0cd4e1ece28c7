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

#ifndef WDQA_SPARQL_PARSER_H_
#define WDQA_SPARQL_PARSER_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "wdqa/sparql/ast.hpp"

namespace wdqa::sparql {

/// Raised on malformed query text. Keywords are case-insensitive; IRIs and
/// variables are case-sensitive.
struct ParseError : std::runtime_error {
  enum class Code {
    kSyntax,         // unexpected token
    kUnknownPrefix,  // prefix outside {wd, wdt, p, ps, pq}
    kMalformedId,    // local id does not match the prefix's id kind
    kUnsupported,    // OPTIONAL, UNION, property paths, subqueries
  };

  ParseError(Code code, std::size_t offset, std::size_t line, std::size_t col,
             std::string message, std::vector<std::string> expected = {});

  const char* CodeName() const;
  /// Diagnostic line in `line:col: code: message` form.
  std::string Render() const;

  Code code;
  std::size_t offset;  // byte offset into the input
  std::size_t line;    // 1-based
  std::size_t col;     // 1-based, in bytes
  std::vector<std::string> expected;
};

/// Parses a query in the Wikidata subset grammar. Deterministic: identical
/// input bytes always produce an identical AST.
Query ParseQuery(std::string_view text);

}  // namespace wdqa::sparql

#endif  // WDQA_SPARQL_PARSER_H_
