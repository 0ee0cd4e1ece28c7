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

#ifndef WDQA_SPARQL_VALIDATE_H_
#define WDQA_SPARQL_VALIDATE_H_

#include <string>
#include <vector>

#include "wdqa/sparql/ast.hpp"

namespace wdqa::sparql {

/// One violated invariant. `node` names the offending AST node.
struct Diagnostic {
  std::string code;
  std::string message;
  std::string node;

  std::string Render() const { return code + ": " + message + " (" + node + ")"; }
};

/// Checks every type invariant of the query AST. Empty result means the
/// query is well-formed. Parse output normally validates clean; this guards
/// hand-built ASTs.
///
/// Codes: bad-iri-id, bad-predicate, empty-variable, unbound-projection,
/// empty-projection, modifier-on-ask, count-arity, filter-arity, bad-limit.
std::vector<Diagnostic> Validate(const Query& q);

}  // namespace wdqa::sparql

#endif  // WDQA_SPARQL_VALIDATE_H_
