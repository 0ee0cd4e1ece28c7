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

#include "wdqa/nn/output_vocab.hpp"

#include <map>

#include "wdqa/sparql/printer.hpp"

namespace wdqa::nn {

using sparql::Iri;
using sparql::IsIri;
using sparql::IsLiteral;
using sparql::IsVariable;
using sparql::Literal;
using sparql::LiteralTag;
using sparql::Prefix;
using sparql::Query;
using sparql::QueryForm;
using sparql::SortDir;
using sparql::Term;
using sparql::Variable;

const std::vector<std::string>& KeywordNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n = {
        "<EOQ>", "ASK",  "SELECT",   "COUNT", "DISTINCT", "WHERE", "{",
        "}",     ".",    "FILTER",   "CONTAINS", "STRSTARTS", "YEAR", "LANG",
        "ORDER BY", "LIMIT", "ASC", "DESC", "=", "<", ">", "<=", ">="};
    for (int v = 1; v <= 8; ++v) n.push_back("?v" + std::to_string(v));
    for (int k = 0; k <= 10; ++k) n.push_back(std::to_string(k));
    return n;
  }();
  return names;
}

OutputVocab::TokenClass OutputVocab::ClassOf(int id) const {
  if (id < kNumKeywords) return TokenClass::kKeyword;
  if (id < kNumKeywords + n_entities_) return TokenClass::kEntity;
  return TokenClass::kRelation;
}

namespace {

bool IsVarToken(int id) { return id >= kKwVar1 && id < kKwVar1 + 8; }
bool IsCmpToken(int id) { return id >= kKwEq && id <= kKwGe; }
bool IsNumToken(int id) { return id >= kKwNum0 && id < kKwNum0 + 11; }

struct Linearizer {
  const data::QuestionRecord& record;
  std::map<std::string, int> var_ids;  // name -> 1-based v index
  std::map<std::string, int> entity_slot;
  std::map<std::string, int> relation_slot;
  std::vector<int> out;

  explicit Linearizer(const data::QuestionRecord& r) : record(r) {
    for (std::size_t i = 0; i < r.entity_candidates.size(); ++i) {
      entity_slot.emplace(sparql::RenderIri(r.entity_candidates[i]), static_cast<int>(i));
    }
    for (std::size_t i = 0; i < r.relation_candidates.size(); ++i) {
      relation_slot.emplace(sparql::RenderIri(r.relation_candidates[i]), static_cast<int>(i));
    }
  }

  void Emit(int id) { out.push_back(id); }

  int VarToken(const Variable& v) {
    auto it = var_ids.find(v.name);
    if (it == var_ids.end()) {
      if (var_ids.size() >= 8) throw LinearizeError("query uses more than 8 variables");
      it = var_ids.emplace(v.name, static_cast<int>(var_ids.size()) + 1).first;
    }
    return kKwVar1 + it->second - 1;
  }

  int TermToken(const Term& t) {
    if (IsVariable(t)) return VarToken(std::get<Variable>(t));
    if (IsIri(t)) {
      const Iri& iri = std::get<Iri>(t);
      const std::string key = sparql::RenderIri(iri);
      const OutputVocab vocab(static_cast<int>(record.entity_candidates.size()),
                              static_cast<int>(record.relation_candidates.size()));
      if (iri.prefix == Prefix::kWd) {
        auto it = entity_slot.find(key);
        if (it == entity_slot.end()) throw LinearizeError("entity " + key + " not in candidates");
        return vocab.EntityToken(it->second);
      }
      auto it = relation_slot.find(key);
      if (it == relation_slot.end()) throw LinearizeError("relation " + key + " not in candidates");
      return vocab.RelationToken(it->second);
    }
    const Literal& lit = std::get<Literal>(t);
    if (lit.tag != LiteralTag::kNumeric) {
      throw LinearizeError("only small integer literals can be emitted");
    }
    try {
      std::size_t used = 0;
      long v = std::stol(lit.lexical, &used);
      if (used == lit.lexical.size() && v >= 0 && v <= 10) {
        return kKwNum0 + static_cast<int>(v);
      }
    } catch (const std::exception&) {
    }
    throw LinearizeError("numeric literal " + lit.lexical + " outside the 0..10 token range");
  }

  void EmitFilter(const sparql::FilterExpr& f) {
    Emit(kKwFilter);
    switch (f.op) {
      case sparql::FilterOp::kContains:
        Emit(kKwContains);
        Emit(TermToken(f.args[0]));
        Emit(TermToken(f.args[1]));
        break;
      case sparql::FilterOp::kStrStarts:
        Emit(kKwStrStarts);
        Emit(TermToken(f.args[0]));
        Emit(TermToken(f.args[1]));
        break;
      case sparql::FilterOp::kLangEquals:
        Emit(kKwLang);
        Emit(TermToken(f.args[0]));
        Emit(TermToken(f.args[1]));
        break;
      case sparql::FilterOp::kYearCompare:
        Emit(kKwYear);
        Emit(TermToken(f.args[0]));
        Emit(kKwEq + static_cast<int>(*f.cmp));
        Emit(TermToken(f.args[1]));
        break;
      case sparql::FilterOp::kNumericCompare:
        Emit(TermToken(f.args[0]));
        Emit(kKwEq + static_cast<int>(*f.cmp));
        Emit(TermToken(f.args[1]));
        break;
    }
  }
};

}  // namespace

std::vector<int> QueryToTokens(const Query& q, const data::QuestionRecord& record) {
  Linearizer lin(record);
  if (q.form == QueryForm::kAsk) {
    lin.Emit(kKwAsk);
  } else {
    lin.Emit(kKwSelect);
    if (q.count) {
      lin.Emit(kKwCount);
      if (q.distinct) lin.Emit(kKwDistinct);
      if (q.projection.empty()) throw LinearizeError("count query without a counted variable");
      lin.Emit(lin.VarToken(q.projection[0]));
    } else {
      if (q.distinct) lin.Emit(kKwDistinct);
      if (q.projection.empty()) throw LinearizeError("select query without projection");
      for (const auto& v : q.projection) lin.Emit(lin.VarToken(v));
    }
  }
  lin.Emit(kKwWhere);
  lin.Emit(kKwLBrace);
  if (q.patterns.empty()) throw LinearizeError("query without triple patterns");
  for (std::size_t i = 0; i < q.patterns.size(); ++i) {
    if (i > 0) lin.Emit(kKwDot);
    lin.Emit(lin.TermToken(q.patterns[i].subject));
    lin.Emit(lin.TermToken(q.patterns[i].predicate));
    lin.Emit(lin.TermToken(q.patterns[i].object));
  }
  for (const auto& f : q.filters) {
    lin.Emit(kKwDot);
    lin.EmitFilter(f);
  }
  lin.Emit(kKwRBrace);
  if (q.order_by) {
    lin.Emit(kKwOrderBy);
    lin.Emit(q.order_by->dir == SortDir::kAscend ? kKwAsc : kKwDesc);
    lin.Emit(lin.VarToken(q.order_by->var));
  }
  if (q.limit) {
    if (*q.limit < 1 || *q.limit > 10) {
      throw LinearizeError("limit " + std::to_string(*q.limit) + " outside the 1..10 token range");
    }
    lin.Emit(kKwLimit);
    lin.Emit(kKwNum0 + static_cast<int>(*q.limit));
  }
  lin.Emit(kKwEoq);
  return lin.out;
}

std::string TokensToText(const std::vector<int>& tokens, const data::QuestionRecord& record) {
  const OutputVocab vocab(static_cast<int>(record.entity_candidates.size()),
                          static_cast<int>(record.relation_candidates.size()));
  auto word = [&](int id) -> std::string {
    if (id < 0) return "?";
    if (id < kNumKeywords) return KeywordNames()[id];
    if (vocab.ClassOf(id) == OutputVocab::TokenClass::kEntity) {
      int slot = vocab.EntitySlot(id);
      if (slot < static_cast<int>(record.entity_candidates.size())) {
        return sparql::RenderIri(record.entity_candidates[slot]);
      }
      return "?";
    }
    int slot = vocab.RelationSlot(id);
    if (slot < static_cast<int>(record.relation_candidates.size())) {
      return sparql::RenderIri(record.relation_candidates[slot]);
    }
    return "?";
  };
  // A token is a filter/comparison operand when it is a variable, a slot
  // pointer, or a small integer.
  auto is_term = [&](int id) {
    return IsVarToken(id) || IsNumToken(id) || id >= kNumKeywords;
  };

  std::vector<std::string> out;
  const int n = static_cast<int>(tokens.size());
  int i = 0;
  while (i < n && tokens[i] != kKwEoq) {
    const int t = tokens[i];
    if (t == kKwSelect && i + 1 < n && tokens[i + 1] == kKwCount) {
      out.push_back("SELECT");
      i += 2;
      bool dist = i < n && tokens[i] == kKwDistinct;
      if (dist) ++i;
      if (i < n && IsVarToken(tokens[i])) {
        out.push_back("(COUNT(" + std::string(dist ? "DISTINCT " : "") + word(tokens[i]) +
                      ") AS ?cnt)");
        ++i;
      } else {
        // Malformed projection: fall back to raw words so parsing fails loudly.
        out.push_back("COUNT");
        if (dist) out.push_back("DISTINCT");
      }
    } else if (t == kKwFilter) {
      const int op = i + 1 < n ? tokens[i + 1] : -1;
      if ((op == kKwContains || op == kKwStrStarts) && i + 3 < n && is_term(tokens[i + 2]) &&
          is_term(tokens[i + 3])) {
        out.push_back("FILTER(" + std::string(op == kKwContains ? "CONTAINS" : "STRSTARTS") + "(" +
                      word(tokens[i + 2]) + ", " + word(tokens[i + 3]) + "))");
        i += 4;
      } else if (op == kKwLang && i + 3 < n && is_term(tokens[i + 2]) && is_term(tokens[i + 3])) {
        out.push_back("FILTER(LANG(" + word(tokens[i + 2]) + ") = " + word(tokens[i + 3]) + ")");
        i += 4;
      } else if (op == kKwYear && i + 4 < n && is_term(tokens[i + 2]) && IsCmpToken(tokens[i + 3]) &&
                 is_term(tokens[i + 4])) {
        out.push_back("FILTER(YEAR(" + word(tokens[i + 2]) + ") " + word(tokens[i + 3]) + " " +
                      word(tokens[i + 4]) + ")");
        i += 5;
      } else if (i + 3 < n && is_term(tokens[i + 1]) && IsCmpToken(tokens[i + 2]) &&
                 is_term(tokens[i + 3])) {
        out.push_back("FILTER(" + word(tokens[i + 1]) + " " + word(tokens[i + 2]) + " " +
                      word(tokens[i + 3]) + ")");
        i += 4;
      } else {
        out.push_back("FILTER");
        ++i;
      }
    } else if (t == kKwOrderBy && i + 2 < n && (tokens[i + 1] == kKwAsc || tokens[i + 1] == kKwDesc) &&
               IsVarToken(tokens[i + 2])) {
      out.push_back("ORDER BY " + std::string(tokens[i + 1] == kKwAsc ? "ASC(" : "DESC(") +
                    word(tokens[i + 2]) + ")");
      i += 3;
    } else {
      out.push_back(word(t));
      ++i;
    }
  }
  std::string text;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k > 0) text += ' ';
    text += out[k];
  }
  return text;
}

}  // namespace wdqa::nn
