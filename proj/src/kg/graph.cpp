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

#include "wdqa/kg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wdqa/sparql/parser.hpp"
#include "wdqa/sparql/printer.hpp"

namespace wdqa::kg {

using sparql::LiteralTag;
using sparql::Prefix;

std::string RenderGround(const GroundTerm& t) { return sparql::RenderTerm(ToTerm(t)); }

sparql::Term ToTerm(const GroundTerm& t) {
  if (const auto* iri = std::get_if<Iri>(&t)) return *iri;
  return std::get<Literal>(t);
}

std::optional<GroundTerm> ToGround(const sparql::Term& t) {
  if (const auto* iri = std::get_if<Iri>(&t)) return GroundTerm(*iri);
  if (const auto* lit = std::get_if<Literal>(&t)) return GroundTerm(*lit);
  return std::nullopt;
}

std::optional<std::array<int, 3>> ParseDate(const std::string& lexical) {
  std::array<int, 3> ymd = {0, 0, 0};
  int field = 0, digits = 0;
  for (char c : lexical) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ymd[field] = ymd[field] * 10 + (c - '0');
      ++digits;
    } else if (c == '-' && digits > 0 && field < 2) {
      ++field;
      digits = 0;
    } else {
      return std::nullopt;
    }
  }
  if (field != 2 || digits == 0) return std::nullopt;
  return ymd;
}

int CompareGround(const GroundTerm& a, const GroundTerm& b) {
  auto rank = [](const GroundTerm& t) {
    if (const auto* lit = std::get_if<Literal>(&t)) {
      if (lit->tag == LiteralTag::kNumeric) return 0;
      if (lit->tag == LiteralTag::kDate) return 1;
      return 2;
    }
    return 3;
  };
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  if (ra == 0) {
    double va = std::stod(std::get<Literal>(a).lexical);
    double vb = std::stod(std::get<Literal>(b).lexical);
    if (va < vb) return -1;
    if (va > vb) return 1;
  } else if (ra == 1) {
    auto da = ParseDate(std::get<Literal>(a).lexical);
    auto db = ParseDate(std::get<Literal>(b).lexical);
    if (da && db && *da != *db) return *da < *db ? -1 : 1;
  }
  std::string ka = RenderGround(a), kb = RenderGround(b);
  if (ka != kb) return ka < kb ? -1 : 1;
  return 0;
}

std::string Triple::Render() const {
  return RenderGround(subject) + " " + sparql::RenderIri(predicate) + " " + RenderGround(object);
}

bool KnowledgeGraph::Add(Triple t) {
  auto [it, inserted] = keys_.insert(t.Render());
  if (inserted) triples_.push_back(std::move(t));
  return inserted;
}

void KnowledgeGraph::SetLabel(const Iri& iri, const std::string& lang, const std::string& label) {
  labels_[iri][lang] = label;
}

std::optional<std::string> KnowledgeGraph::Label(const Iri& iri, const std::string& lang) const {
  auto it = labels_.find(iri);
  if (it == labels_.end()) return std::nullopt;
  auto jt = it->second.find(lang);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

std::vector<std::string> KnowledgeGraph::QualifierWarnings() const {
  std::set<std::string> statement_nodes;
  for (const auto& t : triples_) {
    if (t.predicate.prefix == Prefix::kP) statement_nodes.insert(RenderGround(t.object));
  }
  std::vector<std::string> warnings;
  for (const auto& t : triples_) {
    if (t.predicate.prefix == Prefix::kPs || t.predicate.prefix == Prefix::kPq) {
      if (!statement_nodes.count(RenderGround(t.subject))) {
        warnings.push_back("QualifierDisciplineViolation: subject of " + t.Render() +
                           " is not the object of any p: triple");
      }
    }
  }
  return warnings;
}

std::vector<GroundTerm> KnowledgeGraph::AllTerms() const {
  std::map<std::string, GroundTerm> by_key;
  for (const auto& t : triples_) {
    by_key.emplace(RenderGround(t.subject), t.subject);
    by_key.emplace(sparql::RenderIri(t.predicate), GroundTerm(t.predicate));
    by_key.emplace(RenderGround(t.object), t.object);
  }
  std::vector<GroundTerm> out;
  out.reserve(by_key.size());
  for (auto& [key, term] : by_key) out.push_back(std::move(term));
  return out;
}

namespace {

// Cuts a '#' comment, respecting quoted strings.
std::string StripComment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '\\' && in_string) {
      ++i;
    } else if (c == '"') {
      in_string = !in_string;
    } else if (c == '#' && !in_string) {
      return line.substr(0, i);
    }
  }
  return line;
}

bool IsBlank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

KnowledgeGraph LoadGraph(const std::string& source, std::vector<std::string>* warnings) {
  KnowledgeGraph kg;
  std::istringstream in(source);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = StripComment(line);
    if (IsBlank(line)) continue;
    // Trim the terminating dot.
    std::size_t end = line.find_last_not_of(" \t\r");
    if (end == std::string::npos || line[end] != '.') {
      throw LineParseError(lineno, "missing terminating '.'");
    }
    std::string body = line.substr(0, end);
    // Reuse the query grammar: a graph line is exactly one ground pattern.
    sparql::Query q;
    try {
      q = sparql::ParseQuery("ASK WHERE { " + body + " }");
    } catch (const sparql::ParseError& e) {
      throw LineParseError(lineno, e.what());
    }
    if (q.patterns.size() != 1 || !q.filters.empty()) {
      throw LineParseError(lineno, "expected exactly one triple");
    }
    const auto& p = q.patterns.front();
    auto s = ToGround(p.subject);
    auto o = ToGround(p.object);
    const auto* pred = std::get_if<Iri>(&p.predicate);
    if (!s || !o || !pred) {
      throw LineParseError(lineno, "variables are not allowed in graph triples");
    }
    kg.Add(Triple{*s, *pred, *o});
  }
  if (warnings) {
    auto w = kg.QualifierWarnings();
    warnings->insert(warnings->end(), w.begin(), w.end());
  }
  return kg;
}

void LoadLabels(const std::string& source, KnowledgeGraph& kg) {
  std::istringstream in(source);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = StripComment(line);
    if (IsBlank(line)) continue;
    std::istringstream ls(line);
    std::string iri_text, lang;
    if (!(ls >> iri_text >> lang)) throw LineParseError(lineno, "expected `iri lang label`");
    std::string label;
    std::getline(ls, label);
    std::size_t start = label.find_first_not_of(" \t");
    if (start == std::string::npos) throw LineParseError(lineno, "missing label text");
    label = label.substr(start);
    auto colon = iri_text.find(':');
    if (colon == std::string::npos) throw LineParseError(lineno, "expected prefixed iri");
    auto prefix = sparql::PrefixFromName(iri_text.substr(0, colon));
    if (!prefix) throw LineParseError(lineno, "unknown prefix");
    kg.SetLabel(Iri{*prefix, iri_text.substr(colon + 1)}, lang, label);
  }
}

}  // namespace wdqa::kg
