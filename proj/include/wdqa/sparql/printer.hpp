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

#ifndef WDQA_SPARQL_PRINTER_H_
#define WDQA_SPARQL_PRINTER_H_

#include <string>

#include "wdqa/sparql/ast.hpp"

namespace wdqa::sparql {

std::string RenderIri(const Iri& iri);
std::string RenderTerm(const Term& t);
std::string RenderFilter(const FilterExpr& f);

/// Canonical single-line rendering; ParseQuery(PrintQuery(q)) is structurally
/// equal to q for any query satisfying the type invariants.
std::string PrintQuery(const Query& q);

/// Full-URL form of an IRI, e.g. <http://www.wikidata.org/entity/Q1>.
std::string ExpandIri(const Iri& iri,
                      const std::map<std::string, std::string>& prefix_urls = DefaultPrefixUrls());

}  // namespace wdqa::sparql

#endif  // WDQA_SPARQL_PRINTER_H_
